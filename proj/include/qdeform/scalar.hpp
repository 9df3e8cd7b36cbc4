#ifndef QDEFORM_SCALAR_HPP
#define QDEFORM_SCALAR_HPP

// Exact coefficient fields: the cyclotomic fields Q(zeta_N) and the
// rational-function field Q(q).

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdeform {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised on arithmetic that mixes two different coefficient fields.
class FieldMismatch : public std::invalid_argument {
public:
  FieldMismatch() : std::invalid_argument("scalars belong to different fields") {}
};

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
// The zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline QPoly scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// Quotient and remainder of a by a nonzero divisor b.
inline std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  QPoly quot;
  const int db = degree(b);
  if (degree(a) >= db) quot.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && degree(a) >= db) {
    const int shift = degree(a) - db;
    Rational c = a.back() / lead;
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

inline QPoly monic(const QPoly& p) {
  if (p.empty()) return p;
  return scale(p, Rational(1) / p.back());
}

inline QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// Inverse of a modulo m, assuming gcd(a, m) = 1.
inline QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = a;
  QPoly s0, s1{Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1);
    QPoly s2 = sub(s0, mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw std::domain_error("element is not invertible");
  return divmod(scale(s0, Rational(1) / r0[0]), m).second;
}

inline int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

/// Integer coefficients of the N-th cyclotomic polynomial.
inline QPoly cyclotomic_polynomial(int n) {
  QPoly p(n + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
  }
  return p;
}

struct FieldData {
  bool cyclotomic = false;
  int order = 0;  // N in cyclotomic mode
  int phi = 0;
  QPoly modulus;  // Phi_N, monic
};

inline const FieldData* intern_field(bool cyclotomic, int order) {
  static std::mutex lock;
  static std::map<int, std::unique_ptr<FieldData>> fields;
  const int key = cyclotomic ? order : 0;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = fields[key];
  if (!slot) {
    auto data = std::make_unique<FieldData>();
    data->cyclotomic = cyclotomic;
    if (cyclotomic) {
      data->order = order;
      data->phi = euler_phi(order);
      data->modulus = cyclotomic_polynomial(order);
    }
    slot = std::move(data);
  }
  return slot.get();
}

inline std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace detail

/// Handle to an interned coefficient field. Cheap to copy; equality is identity.
class ScalarField {
public:
  static ScalarField cyclotomic(int root_order) {
    if (root_order < 1) throw std::invalid_argument("root order must be positive");
    return ScalarField(detail::intern_field(true, root_order));
  }
  static ScalarField generic() { return ScalarField(detail::intern_field(false, 0)); }

  bool is_cyclotomic() const { return data_->cyclotomic; }
  bool is_generic() const { return !data_->cyclotomic; }
  /// N for Q(zeta_N); 0 in generic mode.
  int root_order() const { return data_->order; }
  /// [Q(zeta_N) : Q] = phi(N).
  int degree() const { return data_->phi; }
  const detail::QPoly& modulus() const { return data_->modulus; }

  friend bool operator==(ScalarField a, ScalarField b) { return a.data_ == b.data_; }

  std::string name() const {
    return is_cyclotomic() ? "Q(zeta_" + std::to_string(root_order()) + ")" : "Q(q)";
  }

private:
  explicit ScalarField(const detail::FieldData* d) : data_(d) {}
  const detail::FieldData* data_;
};

/// Exact element of a ScalarField in canonical form.
///
/// Cyclotomic elements are residues modulo Phi_N of degree below phi(N).
/// Generic elements are fractions num/den of integer polynomials in q with
/// gcd(num, den) = 1 in Q[q], all coefficients jointly coprime, and a
/// positive leading coefficient on den.
class Scalar {
public:
  explicit Scalar(ScalarField f) : field_(f) {
    if (f.is_generic()) den_ = {Rational(1)};
  }
  Scalar(ScalarField f, const Rational& c) : Scalar(f) {
    if (c != 0) num_ = {c};
    if (f.is_generic()) normalize_fraction();
  }
  Scalar(ScalarField f, long long c) : Scalar(f, Rational(c)) {}

  /// zeta^k in cyclotomic mode; k may be negative.
  static Scalar zeta_power(ScalarField f, long long k) {
    if (!f.is_cyclotomic()) throw std::domain_error("generic field has no root of unity zeta");
    const long long n = f.root_order();
    const long long e = ((k % n) + n) % n;
    Scalar s(f);
    s.num_.assign(static_cast<std::size_t>(e) + 1, Rational(0));
    s.num_[e] = 1;
    s.reduce_cyclotomic();
    return s;
  }

  /// The transcendental q of Q(q).
  static Scalar q_variable(ScalarField f) {
    if (!f.is_generic()) throw std::domain_error("q is only available in generic mode");
    Scalar s(f);
    s.num_ = {Rational(0), Rational(1)};
    return s;
  }

  static Scalar from_fraction(ScalarField f, detail::QPoly num, detail::QPoly den) {
    if (!f.is_generic()) throw std::domain_error("fractions need generic mode");
    Scalar s(f);
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    detail::trim(s.num_);
    detail::trim(s.den_);
    if (s.den_.empty()) throw std::domain_error("zero denominator");
    s.normalize_fraction();
    return s;
  }

  static Scalar from_residue(ScalarField f, detail::QPoly coeffs) {
    if (!f.is_cyclotomic()) throw std::domain_error("residues need cyclotomic mode");
    Scalar s(f);
    s.num_ = std::move(coeffs);
    s.reduce_cyclotomic();
    return s;
  }

  ScalarField field() const { return field_; }
  /// Cyclotomic residue coefficients, or the generic numerator.
  const detail::QPoly& coefficients() const { return num_; }
  const detail::QPoly& denominator_coefficients() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_one() const {
    return num_.size() == 1 && num_[0] == 1 && (field_.is_cyclotomic() || den_.size() == 1);
  }
  /// True when the value lies in Q.
  bool is_rational() const {
    return num_.size() <= 1 && (field_.is_cyclotomic() || den_.size() == 1);
  }
  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational");
    if (num_.empty()) return 0;
    return field_.is_generic() ? num_[0] / den_[0] : num_[0];
  }

  Scalar operator-() const {
    Scalar r(*this);
    for (auto& c : r.num_) c = -c;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    check(o);
    if (field_.is_cyclotomic()) {
      num_ = detail::add(num_, o.num_);
    } else if (den_ == o.den_) {
      num_ = detail::add(num_, o.num_);
      normalize_fraction();
    } else {
      num_ = detail::add(detail::mul(num_, o.den_), detail::mul(o.num_, den_));
      den_ = detail::mul(den_, o.den_);
      normalize_fraction();
    }
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    check(o);
    if (is_zero()) return *this;
    if (o.is_zero()) {
      *this = Scalar(field_);
      return *this;
    }
    if (field_.is_cyclotomic()) {
      if (o.num_.size() == 1) {
        for (auto& c : num_) c *= o.num_[0];
      } else if (num_.size() == 1) {
        Rational c = num_[0];
        num_ = o.num_;
        for (auto& x : num_) x *= c;
      } else {
        num_ = detail::mul(num_, o.num_);
        reduce_cyclotomic();
      }
    } else {
      num_ = detail::mul(num_, o.num_);
      den_ = detail::mul(den_, o.den_);
      normalize_fraction();
    }
    return *this;
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar r(field_);
    if (field_.is_cyclotomic()) {
      if (num_.size() == 1) {
        r.num_ = {Rational(1) / num_[0]};
      } else {
        r.num_ = detail::inverse_mod(num_, field_.modulus());
      }
    } else {
      r.num_ = den_;
      r.den_ = num_;
      r.normalize_fraction();
    }
    return r;
  }

  Scalar& operator/=(const Scalar& o) {
    check(o);
    return *this *= o.inverse();
  }

  Scalar pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(field_, 1);
    Scalar base(*this);
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return result;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Re-derive the canonical form from the stored representation.
  Scalar canonicalized() const {
    Scalar r(*this);
    if (field_.is_cyclotomic()) {
      r.reduce_cyclotomic();
    } else {
      r.normalize_fraction();
    }
    return r;
  }

  std::string str() const {
    if (field_.is_cyclotomic()) return poly_str(num_, "z");
    if (den_.size() == 1 && den_[0] == 1) return poly_str(num_, "q");
    return "(" + poly_str(num_, "q") + ")/(" + poly_str(den_, "q") + ")";
  }

  /// Like str(), but parenthesized when the value is a sum of several terms.
  std::string factor_str() const {
    std::string s = str();
    const bool compound = field_.is_generic() ? !(num_.size() <= 1 && den_.size() == 1)
                                              : std::count_if(num_.begin(), num_.end(),
                                                              [](const Rational& c) { return c != 0; }) > 1;
    return compound ? "(" + s + ")" : s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
  void check(const Scalar& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch();
  }

  void reduce_cyclotomic() {
    detail::trim(num_);
    if (static_cast<int>(num_.size()) > field_.degree()) num_ = detail::divmod(num_, field_.modulus()).second;
  }

  void normalize_fraction() {
    detail::trim(num_);
    detail::trim(den_);
    if (num_.empty()) {
      den_ = {Rational(1)};
      return;
    }
    if (den_.size() > 1 && num_.size() > 1) {
      detail::QPoly g = detail::gcd(num_, den_);
      if (g.size() > 1) {
        num_ = detail::divmod(num_, g).first;
        den_ = detail::divmod(den_, g).first;
      }
    }
    // Clear denominators, then remove the joint integer content.
    Integer l = 1;
    for (const auto* p : {&num_, &den_}) {
      for (const auto& c : *p) l = boost::multiprecision::lcm(l, Integer(denominator(c)));
    }
    Integer g = 0;
    for (auto* p : {&num_, &den_}) {
      for (auto& c : *p) {
        c *= l;
        g = boost::multiprecision::gcd(g, Integer(numerator(c)));
      }
    }
    if (den_.back() < 0) g = -g;
    for (auto* p : {&num_, &den_}) {
      for (auto& c : *p) c /= g;
    }
  }

  static std::string poly_str(const detail::QPoly& p, const char* var) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = detail::degree(p); i >= 0; --i) {
      const Rational& c = p[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += detail::rational_str(mag);
      } else {
        if (mag != 1) out += detail::rational_str(mag) + "*";
        out += var;
        out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  ScalarField field_;
  detail::QPoly num_;
  detail::QPoly den_;
};

/// zeta^k reduced canonically.
inline Scalar zeta_power(ScalarField f, long long k) { return Scalar::zeta_power(f, k); }

/// Smallest l >= 1 with x^l = 1, or nullopt when x has infinite order.
inline std::optional<int> multiplicative_order(const Scalar& x) {
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
  const ScalarField f = x.field();
  if (f.is_generic()) {
    // The only roots of unity in Q(q) are +1 and -1.
    if (x.is_one()) return 1;
    if ((-x).is_one()) return 2;
    return std::nullopt;
  }
  // Roots of unity in Q(zeta_N) are the lcm(2, N)-th roots of unity.
  const int bound = f.root_order() % 2 == 0 ? f.root_order() : 2 * f.root_order();
  Scalar power = x;
  for (int l = 1; l <= bound; ++l) {
    if (power.is_one()) return l;
    power *= x;
  }
  return std::nullopt;
}

namespace detail {

// Recursive-descent parser for the scalar literal grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | atom
//   atom   := int ['/' int] | ('z' | 'q') ['^' ['-'] int] | '(' expr ')'
class ScalarParser {
public:
  ScalarParser(std::string_view text, ScalarField f) : text_(text), field_(f) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar literal '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
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

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (accept('*')) v *= unary();
    return v;
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    return atom();
  }

  long long exponent() {
    if (!accept('^')) return 1;
    const bool neg = accept('-');
    const long long e = integer().convert_to<long long>();
    return neg ? -e : e;
  }

  Scalar atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'z') {
      ++pos_;
      if (!field_.is_cyclotomic()) fail("'z' requires a cyclotomic field");
      return Scalar::zeta_power(field_, exponent());
    }
    if (c == 'q') {
      ++pos_;
      if (!field_.is_generic()) fail("'q' requires generic mode");
      return Scalar::q_variable(field_).pow(exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (accept('/')) {
        den = integer();
        if (den == 0) fail("zero denominator");
      }
      return Scalar(field_, Rational(num, den));
    }
    fail("unexpected character");
  }

  std::string_view text_;
  ScalarField field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text, ScalarField f) { return detail::ScalarParser(text, f).parse(); }

}  // namespace qdeform

#endif  // QDEFORM_SCALAR_HPP
