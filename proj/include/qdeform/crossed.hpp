#ifndef QDEFORM_CROSSED_HPP
#define QDEFORM_CROSSED_HPP

// The crossed product S(V) #_alpha G with basis x^k h-bar.

#include "qdeform/group.hpp"
#include "qdeform/scalar.hpp"

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdeform {

inline constexpr int kMaxVariables = 8;

/// Exponent vector x_1^{k_1} ... x_n^{k_n}; ordered by total degree, then lexicographically.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int n) : n_(static_cast<std::uint8_t>(n)) {
    if (n < 0 || n > kMaxVariables) throw std::invalid_argument("at most 8 variables are supported");
  }
  Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
    int i = 0;
    for (int e : exps) set(i++, e);
  }
  static Monomial from_vector(const std::vector<int>& exps) {
    Monomial m(static_cast<int>(exps.size()));
    for (int i = 0; i < m.size(); ++i) m.set(i, exps[i]);
    return m;
  }
  static Monomial variable(int n, int i, int power = 1) {
    Monomial m(n);
    m.set(i, power);
    return m;
  }

  int size() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) {
    if (v < 0) throw std::invalid_argument("negative exponent");
    deg_ += v - e_[i];
    e_[i] = static_cast<std::uint16_t>(v);
  }
  int degree() const { return deg_; }
  std::vector<int> exponents() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(r.e_[i] + o.e_[i]);
    r.deg_ += o.deg_;
    return r;
  }

  /// Divides by x_i; requires a positive exponent.
  Monomial lowered(int i) const {
    Monomial r(*this);
    r.set(i, e_[i] - 1);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.deg_ <=> b.deg_; c != 0) return c;
    return a.e_ <=> b.e_;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += " ";
      s += "x" + std::to_string(i + 1);
      if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

private:
  std::array<std::uint16_t, kMaxVariables> e_{};
  std::uint8_t n_ = 0;
  int deg_ = 0;
};

/// All monomials in n variables of total degree <= d, restricted to the
/// given coordinates (all coordinates when `coords` is empty).
inline std::vector<Monomial> monomials_up_to(int n, int d, const std::vector<int>& coords = {}) {
  std::vector<int> vars = coords;
  if (vars.empty() && coords.empty()) {
    vars.resize(n);
    for (int i = 0; i < n; ++i) vars[i] = i;
  }
  std::vector<Monomial> out;
  std::function<void(std::size_t, int, Monomial&)> rec = [&](std::size_t pos, int left, Monomial& m) {
    if (pos == vars.size()) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      m.set(vars[pos], e);
      rec(pos + 1, left - e, m);
    }
    m.set(vars[pos], 0);
  };
  Monomial m(n);
  rec(0, d, m);
  std::sort(out.begin(), out.end());
  return out;
}

/// Monomials in exactly the given coordinates (possibly none), degree <= d.
inline std::vector<Monomial> monomials_in(int n, const std::vector<int>& coords, int d) {
  if (coords.empty()) return {Monomial(n)};
  return monomials_up_to(n, d, coords);
}

/// S(V)/(x_i^{m_i}) #_alpha G; nilpotency bound 0 means x_i is free.
class CrossedProduct {
public:
  CrossedProduct(GroupSpec group, TwoCocycle alpha, std::vector<int> nilpotency = {})
      : group_(std::move(group)), alpha_(std::move(alpha)), nil_(std::move(nilpotency)) {
    if (group_.dimension() > kMaxVariables) throw std::invalid_argument("[space] n: at most 8 variables");
    if (alpha_.group_size() != group_.size()) throw std::invalid_argument("cocycle does not match the group");
    if (nil_.empty()) nil_.assign(group_.dimension(), 0);
    if (static_cast<int>(nil_.size()) != group_.dimension())
      throw std::invalid_argument("[space] nilpotent: need one bound per variable");
  }

  const GroupSpec& group() const { return group_; }
  const TwoCocycle& alpha() const { return alpha_; }
  ScalarField field() const { return group_.field(); }
  int dimension() const { return group_.dimension(); }
  const std::vector<int>& nilpotency() const { return nil_; }
  bool has_nilpotency() const {
    return std::any_of(nil_.begin(), nil_.end(), [](int m) { return m > 0; });
  }
  /// True when x^m is zero in the quotient by the nilpotency relations.
  bool vanishes(const Monomial& m) const {
    for (int i = 0; i < dimension(); ++i)
      if (nil_[i] > 0 && m[i] >= nil_[i]) return true;
    return false;
  }

private:
  GroupSpec group_;
  TwoCocycle alpha_;
  std::vector<int> nil_;
};

using AlgebraPtr = std::shared_ptr<const CrossedProduct>;

inline AlgebraPtr make_algebra(GroupSpec group, TwoCocycle alpha, std::vector<int> nilpotency = {}) {
  return std::make_shared<const CrossedProduct>(std::move(group), std::move(alpha), std::move(nilpotency));
}

/// Basis element x^k h-bar.
struct BasisKey {
  Monomial mono;
  int group = 0;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  friend std::strong_ordering operator<=>(const BasisKey& a, const BasisKey& b) {
    if (auto c = a.mono <=> b.mono; c != 0) return c;
    return a.group <=> b.group;
  }
};

/// Finite sum of basis elements with nonzero coefficients.
class CPElement {
public:
  using Terms = std::map<BasisKey, Scalar>;

  explicit CPElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

  static CPElement basis(const AlgebraPtr& alg, const Monomial& m, int g) {
    CPElement e(alg);
    e.add_term({m, g}, Scalar(alg->field(), 1));
    return e;
  }
  static CPElement one(const AlgebraPtr& alg) { return basis(alg, Monomial(alg->dimension()), alg->group().identity()); }
  /// The group basis element g-bar.
  static CPElement group_unit(const AlgebraPtr& alg, int g) { return basis(alg, Monomial(alg->dimension()), g); }
  static CPElement scalar(const AlgebraPtr& alg, const Scalar& c) {
    CPElement e(alg);
    e.add_term({Monomial(alg->dimension()), alg->group().identity()}, c);
    return e;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c * key; drops basis elements killed by nilpotency and zero sums.
  void add_term(const BasisKey& key, const Scalar& c) {
    if (c.is_zero() || alg_->vanishes(key.mono)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const CPElement& o, const Scalar& c) {
    check(o);
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add_term(k, v * c);
  }

  CPElement& operator+=(const CPElement& o) {
    check(o);
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  CPElement& operator-=(const CPElement& o) {
    check(o);
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  CPElement& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  friend CPElement operator+(CPElement a, const CPElement& b) { return a += b; }
  friend CPElement operator-(CPElement a, const CPElement& b) { return a -= b; }
  friend CPElement operator*(CPElement a, const Scalar& c) { return a *= c; }
  friend CPElement operator*(const Scalar& c, CPElement a) { return a *= c; }
  CPElement operator-() const {
    CPElement r(*this);
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  friend bool operator==(const CPElement& a, const CPElement& b) { return a.terms_ == b.terms_; }

  /// Largest total degree of a monomial in the support; -1 for zero.
  int degree() const {
    int d = -1;
    for (const auto& [k, v] : terms_) d = std::max(d, k.mono.degree());
    return d;
  }

  std::string str() const;

private:
  void check(const CPElement& o) const {
    if (alg_ != o.alg_ && !(alg_ && o.alg_ && alg_.get() == o.alg_.get()))
      throw std::invalid_argument("elements belong to different algebras");
  }

  AlgebraPtr alg_;
  Terms terms_;
};

namespace detail {

inline std::string basis_str(const CrossedProduct& alg, const BasisKey& key) {
  std::string s;
  if (key.mono.degree() > 0) s = key.mono.str();
  if (key.group != alg.group().identity()) {
    if (!s.empty()) s += "*";
    s += alg.group().element(key.group).str();
  }
  return s;
}

/// Appends "c*basis" to out with sign handling; basis may be empty (means 1).
inline void append_term(std::string& out, const Scalar& c, const std::string& basis) {
  std::string coef;
  bool negative = false;
  if (c.is_rational()) {
    Rational r = c.rational_value();
    negative = r < 0;
    if (negative) r = -r;
    coef = detail::rational_str(r);
  } else {
    coef = c.factor_str();
  }
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (basis.empty()) {
    out += coef;
  } else if (coef == "1") {
    out += basis;
  } else {
    out += coef + "*" + basis;
  }
}

}  // namespace detail

inline std::string CPElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : terms_) detail::append_term(out, v, detail::basis_str(*alg_, k));
  return out;
}

/// (r g-bar)(s h-bar) = alpha(g,h) r g(s) (gh)-bar, extended bilinearly.
inline CPElement cp_mul(const CPElement& a, const CPElement& b) {
  if (a.algebra().get() != b.algebra().get()) throw std::invalid_argument("cp_mul: algebra mismatch");
  const CrossedProduct& alg = *a.algebra();
  const GroupSpec& G = alg.group();
  CPElement out(a.algebra());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Monomial m = ka.mono * kb.mono;
      if (alg.vanishes(m)) continue;
      const int twist = G.monomial_character_exponent(ka.group, kb.mono.exponents());
      Scalar c = ca * cb;
      c *= alg.alpha()(ka.group, kb.group);
      if (twist != 0) c *= G.zeta(twist);
      out.add_term({m, G.mul(ka.group, kb.group)}, c);
    }
  }
  return out;
}

inline CPElement operator*(const CPElement& a, const CPElement& b) { return cp_mul(a, b); }

/// (g-bar)^{-1} = alpha(g, g^{-1})^{-1} (g^{-1})-bar.
inline CPElement group_unit_inverse(const AlgebraPtr& alg, int g) {
  const int gi = alg->group().inv(g);
  return CPElement::group_unit(alg, gi) * alg->alpha()(g, gi).inverse();
}

/// The inner action g(a) = g-bar a (g-bar)^{-1}.
inline CPElement conjugate(int g, const CPElement& a) {
  const AlgebraPtr& alg = a.algebra();
  return cp_mul(cp_mul(CPElement::group_unit(alg, g), a), group_unit_inverse(alg, g));
}

/// h(x^m) as an element of S(V) (trivial group part).
inline CPElement act_on_polynomial(int h, const CPElement& p) {
  const AlgebraPtr& alg = p.algebra();
  const GroupSpec& G = alg->group();
  CPElement out(alg);
  for (const auto& [k, c] : p.terms()) {
    if (k.group != G.identity()) throw std::invalid_argument("act_on_polynomial: element has a group part");
    out.add_term(k, c * G.zeta(G.monomial_character_exponent(h, k.mono.exponents())));
  }
  return out;
}

namespace detail {

// Parser for element literals: terms `coef * x1^e1 x2^e2 ... * g(a1,...,ak)`
// joined by + and -; coefficients use the scalar grammar, parenthesized when
// they are sums.
class ElementParser {
public:
  ElementParser(std::string_view text, const AlgebraPtr& alg) : text_(text), alg_(alg) {}

  CPElement parse() {
    CPElement out(alg_);
    skip();
    if (pos_ == text_.size()) fail("empty element");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negative = true;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [key, coef] = term();
      out.add_term(key, negative ? -coef : coef);
      skip();
    }
    return out;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("element literal '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  long long integer() {
    skip();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    const long long v = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  std::pair<BasisKey, Scalar> term() {
    const int n = alg_->dimension();
    Monomial mono(n);
    int group = alg_->group().identity();
    Scalar coef(alg_->field(), 1);
    bool any = false;
    for (;;) {
      skip();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == 'x') {
        // A run of variables separated by whitespace.
        while (peek('x')) {
          ++pos_;
          const long long idx = integer();
          if (idx < 1 || idx > n) fail("variable index out of range");
          long long e = 1;
          if (accept('^')) e = integer();
          if (e < 0) fail("negative exponent");
          mono.set(static_cast<int>(idx - 1), mono[static_cast<int>(idx - 1)] + static_cast<int>(e));
        }
      } else if (c == 'g') {
        ++pos_;
        if (!accept('(')) fail("expected '(' after g");
        GroupElement e;
        if (!peek(')')) {
          do {
            e.exponents.push_back(static_cast<int>(integer()));
          } while (accept(','));
        }
        if (!accept(')')) fail("expected ')'");
        if (static_cast<int>(e.exponents.size()) != alg_->group().rank()) fail("group tag has wrong rank");
        group = alg_->group().mul(group, alg_->group().index(e));
      } else if (c == '(') {
        const std::size_t start = pos_;
        int depth = 0;
        do {
          if (text_[pos_] == '(') ++depth;
          if (text_[pos_] == ')') --depth;
          ++pos_;
        } while (pos_ < text_.size() && depth > 0);
        if (depth != 0) fail("unbalanced parentheses");
        coef *= parse_scalar(text_.substr(start, pos_ - start), alg_->field());
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == 'z' || c == 'q') {
        const std::size_t start = pos_;
        if (c == 'z' || c == 'q') {
          ++pos_;
          if (accept('^')) integer();
        } else {
          integer();
          if (accept('/')) integer();
        }
        coef *= parse_scalar(text_.substr(start, pos_ - start), alg_->field());
      } else {
        fail("unexpected character");
      }
      any = true;
      skip();
      if (!accept('*')) break;
    }
    if (!any) fail("empty term");
    return {{mono, group}, coef};
  }

  std::string_view text_;
  const AlgebraPtr& alg_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CPElement parse_element(std::string_view text, const AlgebraPtr& alg) {
  return detail::ElementParser(text, alg).parse();
}

}  // namespace qdeform

#endif  // QDEFORM_CROSSED_HPP
