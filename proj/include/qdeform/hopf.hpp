#ifndef QDEFORM_HOPF_HPP
#define QDEFORM_HOPF_HPP

// The Hopf algebra H generated by D1, D2, sigma^{+-1} with
//   D1 D2 = D2 D1,   q sigma D_i = D_i sigma,
//   Delta(D1) = D1 (x) sigma + 1 (x) D1,   Delta(D2) = D2 (x) 1 + sigma (x) D2,
//   Delta(sigma) = sigma (x) sigma,
// its quotient H_q = H/(D1^l, D2^l) at a primitive l-th root of unity, and
// the universal deformation formula exp_q(t D1 (x) D2).

#include "qdeform/check.hpp"
#include "qdeform/qcalc.hpp"
#include "qdeform/scalar.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

/// Normal-form word D1^a D2^b sigma^c.
struct HopfMonomial {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const HopfMonomial&, const HopfMonomial&) = default;
  friend bool operator==(const HopfMonomial&, const HopfMonomial&) = default;

  static HopfMonomial d1(int power = 1) { return {power, 0, 0}; }
  static HopfMonomial d2(int power = 1) { return {0, power, 0}; }
  static HopfMonomial sigma(int power = 1) { return {0, 0, power}; }

  std::string str() const {
    std::string s;
    auto put = [&](const char* name, int e) {
      if (e == 0) return;
      if (!s.empty()) s += " ";
      s += name;
      if (e != 1) s += "^" + std::to_string(e);
    };
    put("D1", a);
    put("D2", b);
    put("sigma", c);
    return s.empty() ? "1" : s;
  }
};

/// Presentation data: q, whether D1^l = D2^l = 0 is imposed, and an optional
/// finite order M for sigma (sigma^M = 1).
class HopfAlgebra {
public:
  static std::shared_ptr<const HopfAlgebra> full(QContext ctx) {
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(ctx), false, std::nullopt));
  }
  /// H_q: the quotient at a root of unity, H itself otherwise.
  static std::shared_ptr<const HopfAlgebra> h_q(QContext ctx) {
    const bool quotient = ctx.truncated();
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(ctx), quotient, std::nullopt));
  }
  /// H_q / (sigma^M - 1); needs q^M = 1.
  static std::shared_ptr<const HopfAlgebra> with_sigma_order(QContext ctx, int order) {
    if (order < 1 || !ctx.q().pow(order).is_one()) throw std::invalid_argument("sigma order must satisfy q^M = 1");
    const bool quotient = ctx.truncated();
    return std::shared_ptr<const HopfAlgebra>(new HopfAlgebra(std::move(ctx), quotient, order));
  }

  const QContext& ctx() const { return ctx_; }
  ScalarField field() const { return ctx_.field(); }
  bool is_quotient() const { return quotient_; }
  std::optional<int> sigma_order() const { return sigma_order_; }

  bool vanishes(const HopfMonomial& m) const {
    return quotient_ && (m.a >= *ctx_.ell() || m.b >= *ctx_.ell());
  }

  HopfMonomial reduce(HopfMonomial m) const {
    if (sigma_order_) m.c = ((m.c % *sigma_order_) + *sigma_order_) % *sigma_order_;
    return m;
  }

  /// q-power picked up by moving sigma^{c1} past D1^{a2} D2^{b2}:
  /// sigma^c D = q^{-c} D sigma^c.
  Scalar twist(const HopfMonomial& left, const HopfMonomial& right) const {
    const long long e = -static_cast<long long>(left.c) * (right.a + right.b);
    return e == 0 ? ctx_.one() : q_pow(e);
  }

  HopfMonomial product(const HopfMonomial& x, const HopfMonomial& y) const {
    return reduce({x.a + y.a, x.b + y.b, x.c + y.c});
  }

  Scalar q_pow(long long e) const {
    auto it = q_cache_.find(e);
    if (it != q_cache_.end()) return it->second;
    return ctx_.q().pow(e);
  }

private:
  HopfAlgebra(QContext ctx, bool quotient, std::optional<int> sigma_order)
      : ctx_(std::move(ctx)), quotient_(quotient), sigma_order_(sigma_order) {
    for (long long e = -16; e <= 16; ++e) q_cache_.emplace(e, ctx_.q().pow(e));
  }

  QContext ctx_;
  bool quotient_;
  std::optional<int> sigma_order_;
  std::map<long long, Scalar> q_cache_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

/// Element of H or H_q in normal form.
class HopfElement {
public:
  explicit HopfElement(HopfPtr alg) : alg_(std::move(alg)) {}

  static HopfElement monomial(const HopfPtr& alg, HopfMonomial m, std::optional<Scalar> c = std::nullopt) {
    HopfElement e(alg);
    e.add_term(m, c ? *c : alg->ctx().one());
    return e;
  }
  static HopfElement one(const HopfPtr& alg) { return monomial(alg, {}); }
  static HopfElement d1(const HopfPtr& alg) { return monomial(alg, HopfMonomial::d1()); }
  static HopfElement d2(const HopfPtr& alg) { return monomial(alg, HopfMonomial::d2()); }
  static HopfElement sigma(const HopfPtr& alg, int power = 1) { return monomial(alg, HopfMonomial::sigma(power)); }

  const HopfPtr& algebra() const { return alg_; }
  const std::map<HopfMonomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const HopfMonomial& m0, const Scalar& c) {
    const HopfMonomial m = alg_->reduce(m0);
    if (c.is_zero() || alg_->vanishes(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  HopfElement& operator+=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  HopfElement& operator-=(const HopfElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  HopfElement& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(HopfElement a, const Scalar& s) { return a *= s; }
  friend HopfElement operator*(const Scalar& s, HopfElement a) { return a *= s; }

  friend bool operator==(const HopfElement& a, const HopfElement& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.factor_str() + "*" + m.str();
    }
    return out;
  }

private:
  HopfPtr alg_;
  std::map<HopfMonomial, Scalar> terms_;
};

/// Normal-form product; sigma moves contribute powers of q.
inline HopfElement normal_form_mul(const HopfElement& x, const HopfElement& y) {
  if (x.algebra().get() != y.algebra().get()) throw std::invalid_argument("normal_form_mul: context mismatch");
  const HopfAlgebra& alg = *x.algebra();
  HopfElement out(x.algebra());
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms()) out.add_term(alg.product(m1, m2), alg.twist(m1, m2) * c1 * c2);
  return out;
}

inline HopfElement operator*(const HopfElement& x, const HopfElement& y) { return normal_form_mul(x, y); }

inline HopfElement power(const HopfElement& x, int k) {
  HopfElement r = HopfElement::one(x.algebra());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

/// Key of a tensor basis element: t^{tdeg} m_0 (x) ... (x) m_{r-1}.
struct TensorKey {
  int tdeg = 0;
  std::array<HopfMonomial, 3> slot{};

  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

/// Element of (H^{(x) r})[t], r <= 3, multiplied slotwise. An optional
/// truncation order drops every term of t-degree above it.
class TensorElement {
public:
  TensorElement(HopfPtr alg, int arity, int truncation = -1)
      : alg_(std::move(alg)), arity_(arity), trunc_(truncation) {
    if (arity < 1 || arity > 3) throw std::invalid_argument("tensor arity must be 1, 2 or 3");
  }

  static TensorElement pure(const HopfPtr& alg, std::vector<HopfMonomial> slots, int tdeg = 0,
                            std::optional<Scalar> c = std::nullopt, int truncation = -1) {
    TensorElement e(alg, static_cast<int>(slots.size()), truncation);
    TensorKey k;
    k.tdeg = tdeg;
    for (std::size_t i = 0; i < slots.size(); ++i) k.slot[i] = slots[i];
    e.add_term(k, c ? *c : alg->ctx().one());
    return e;
  }
  static TensorElement one(const HopfPtr& alg, int arity, int truncation = -1) {
    return pure(alg, std::vector<HopfMonomial>(arity), 0, std::nullopt, truncation);
  }

  const HopfPtr& algebra() const { return alg_; }
  int arity() const { return arity_; }
  int truncation() const { return trunc_; }
  const std::map<TensorKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(TensorKey k, const Scalar& c) {
    if (c.is_zero()) return;
    if (trunc_ >= 0 && k.tdeg > trunc_) return;
    for (int i = 0; i < arity_; ++i) {
      k.slot[i] = alg_->reduce(k.slot[i]);
      if (alg_->vanishes(k.slot[i])) return;
    }
    for (int i = arity_; i < 3; ++i) k.slot[i] = {};
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  TensorElement with_truncation(int truncation) const {
    TensorElement r(alg_, arity_, truncation);
    for (const auto& [k, c] : terms_) r.add_term(k, c);
    return r;
  }

  TensorElement& operator+=(const TensorElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TensorElement& operator-=(const TensorElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  TensorElement& operator*=(const Scalar& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(TensorElement a, const Scalar& s) { return a *= s; }
  friend TensorElement operator*(const Scalar& s, TensorElement a) { return a *= s; }

  friend TensorElement operator*(const TensorElement& x, const TensorElement& y) {
    x.check(y);
    const HopfAlgebra& alg = *x.alg_;
    TensorElement out(x.alg_, x.arity_, merged_truncation(x, y));
    for (const auto& [k1, c1] : x.terms_) {
      for (const auto& [k2, c2] : y.terms_) {
        if (out.trunc_ >= 0 && k1.tdeg + k2.tdeg > out.trunc_) continue;
        TensorKey k;
        k.tdeg = k1.tdeg + k2.tdeg;
        Scalar c = c1 * c2;
        for (int i = 0; i < x.arity_; ++i) {
          k.slot[i] = alg.product(k1.slot[i], k2.slot[i]);
          c *= alg.twist(k1.slot[i], k2.slot[i]);
        }
        out.add_term(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  /// Lowest t-degree present; -1 for zero.
  int min_t_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_)
      if (d < 0 || k.tdeg < d) d = k.tdeg;
    return d;
  }

  std::string key_str(const TensorKey& k) const {
    std::string s;
    if (k.tdeg) s = "t^" + std::to_string(k.tdeg) + " ";
    for (int i = 0; i < arity_; ++i) {
      if (i) s += " (x) ";
      s += k.slot[i].str();
    }
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.factor_str() + "*[" + key_str(k) + "]";
    }
    return out;
  }

private:
  void check(const TensorElement& o) const {
    if (alg_.get() != o.alg_.get() || arity_ != o.arity_) throw std::invalid_argument("tensor shape mismatch");
  }
  static int merged_truncation(const TensorElement& x, const TensorElement& y) {
    if (x.trunc_ < 0) return y.trunc_;
    if (y.trunc_ < 0) return x.trunc_;
    return std::min(x.trunc_, y.trunc_);
  }

  HopfPtr alg_;
  int arity_;
  int trunc_;
  std::map<TensorKey, Scalar> terms_;
};

/// Embeds an element of H as a one-slot tensor.
inline TensorElement as_tensor(const HopfElement& h, int truncation = -1) {
  TensorElement r(h.algebra(), 1, truncation);
  for (const auto& [m, c] : h.terms()) {
    TensorKey k;
    k.slot[0] = m;
    r.add_term(k, c);
  }
  return r;
}

/// Applies a linear map H -> H^{(x) s} to slot `pos` of x, producing a
/// tensor of arity arity - 1 + s. The map is given on normal-form monomials.
inline TensorElement map_slot(const TensorElement& x, int pos, int out_slots,
                              const std::function<TensorElement(const HopfMonomial&)>& f) {
  const int arity = x.arity() - 1 + out_slots;
  TensorElement out(x.algebra(), std::max(arity, 1), x.truncation());
  std::map<HopfMonomial, TensorElement> cache;
  for (const auto& [k, c] : x.terms()) {
    auto it = cache.find(k.slot[pos]);
    if (it == cache.end()) it = cache.emplace(k.slot[pos], f(k.slot[pos])).first;
    for (const auto& [ik, ic] : it->second.terms()) {
      TensorKey nk;
      nk.tdeg = k.tdeg + ik.tdeg;
      int w = 0;
      for (int i = 0; i < pos; ++i) nk.slot[w++] = k.slot[i];
      for (int i = 0; i < out_slots; ++i) nk.slot[w++] = ik.slot[i];
      for (int i = pos + 1; i < x.arity(); ++i) nk.slot[w++] = k.slot[i];
      out.add_term(nk, c * ic);
    }
  }
  return out;
}

namespace detail {

inline TensorElement generator_coproduct(const HopfPtr& alg, int which) {
  using M = HopfMonomial;
  switch (which) {
    case 0:  // D1 (x) sigma + 1 (x) D1
      return TensorElement::pure(alg, {M::d1(), M::sigma()}) + TensorElement::pure(alg, {M{}, M::d1()});
    case 1:  // D2 (x) 1 + sigma (x) D2
      return TensorElement::pure(alg, {M::d2(), M{}}) + TensorElement::pure(alg, {M::sigma(), M::d2()});
    case 2:
      return TensorElement::pure(alg, {M::sigma(), M::sigma()});
    default:
      return TensorElement::pure(alg, {M::sigma(-1), M::sigma(-1)});
  }
}

inline TensorElement tensor_power(const TensorElement& x, int k) {
  TensorElement r = TensorElement::one(x.algebra(), x.arity(), x.truncation());
  for (int i = 0; i < k; ++i) r = r * x;
  return r;
}

}  // namespace detail

/// Delta on a normal-form monomial: Delta(D1)^a Delta(D2)^b Delta(sigma)^c.
inline TensorElement coproduct(const HopfPtr& alg, const HopfMonomial& m) {
  TensorElement r = detail::tensor_power(detail::generator_coproduct(alg, 0), m.a);
  r = r * detail::tensor_power(detail::generator_coproduct(alg, 1), m.b);
  r = r * detail::tensor_power(detail::generator_coproduct(alg, m.c >= 0 ? 2 : 3), m.c >= 0 ? m.c : -m.c);
  return r;
}

inline TensorElement coproduct(const HopfElement& h) {
  return map_slot(as_tensor(h), 0, 2, [&](const HopfMonomial& m) { return coproduct(h.algebra(), m); });
}

/// Delta applied to slot `pos`.
inline TensorElement apply_coproduct(const TensorElement& x, int pos) {
  if (x.arity() >= 3) throw std::invalid_argument("coproduct would exceed arity 3");
  return map_slot(x, pos, 2, [&](const HopfMonomial& m) { return coproduct(x.algebra(), m); });
}

inline Scalar counit(const HopfPtr& alg, const HopfMonomial& m) {
  return (m.a == 0 && m.b == 0) ? alg->ctx().one() : alg->ctx().zero();
}

inline Scalar counit(const HopfElement& h) {
  Scalar s = h.algebra()->ctx().zero();
  for (const auto& [m, c] : h.terms()) s += counit(h.algebra(), m) * c;
  return s;
}

/// epsilon applied to slot `pos`; arity drops by one (to at least 1).
inline TensorElement apply_counit(const TensorElement& x, int pos) {
  if (x.arity() == 1) throw std::invalid_argument("counit on a one-slot tensor; use counit()");
  TensorElement out(x.algebra(), x.arity() - 1, x.truncation());
  for (const auto& [k, c] : x.terms()) {
    Scalar e = counit(x.algebra(), k.slot[pos]);
    if (e.is_zero()) continue;
    TensorKey nk;
    nk.tdeg = k.tdeg;
    int w = 0;
    for (int i = 0; i < x.arity(); ++i)
      if (i != pos) nk.slot[w++] = k.slot[i];
    out.add_term(nk, c * e);
  }
  return out;
}

/// Inserts 1 into position `pos`, e.g. F -> F (x) 1 or 1 (x) F.
inline TensorElement insert_unit(const TensorElement& x, int pos) {
  if (x.arity() >= 3) throw std::invalid_argument("arity would exceed 3");
  TensorElement out(x.algebra(), x.arity() + 1, x.truncation());
  for (const auto& [k, c] : x.terms()) {
    TensorKey nk;
    nk.tdeg = k.tdeg;
    int w = 0;
    for (int i = 0; i <= x.arity(); ++i) nk.slot[i] = (i == pos) ? HopfMonomial{} : k.slot[w++];
    out.add_term(nk, c);
  }
  return out;
}

/// S(D1) = -D1 sigma^{-1}, S(D2) = -sigma^{-1} D2, S(sigma) = sigma^{-1},
/// extended as an anti-homomorphism: S(D1^a D2^b sigma^c) = S(sigma)^c S(D2)^b S(D1)^a.
inline HopfElement antipode(const HopfPtr& alg, const HopfMonomial& m) {
  const Scalar minus_one = -alg->ctx().one();
  const HopfElement s1 = HopfElement::monomial(alg, HopfMonomial::d1()) * HopfElement::sigma(alg, -1) * minus_one;
  const HopfElement s2 = HopfElement::sigma(alg, -1) * HopfElement::monomial(alg, HopfMonomial::d2()) * minus_one;
  HopfElement r = HopfElement::sigma(alg, -m.c);
  r = r * power(s2, m.b);
  r = r * power(s1, m.a);
  return r;
}

inline HopfElement antipode(const HopfElement& h) {
  HopfElement out(h.algebra());
  for (const auto& [m, c] : h.terms()) out += antipode(h.algebra(), m) * c;
  return out;
}

/// exp_q(y): sum_{i<l} y^i/(i)_q! at a primitive l-th root of unity (l >= 2);
/// otherwise sum_i y^i/(i)_q! up to the tensor's truncation order, or until
/// y^i vanishes.
inline TensorElement exp_q(const TensorElement& y) {
  const QContext& ctx = y.algebra()->ctx();
  TensorElement result = TensorElement::one(y.algebra(), y.arity(), y.truncation());
  TensorElement term = result;
  for (int i = 1;; ++i) {
    if (ctx.truncated() && i >= *ctx.ell()) break;
    term = term * y;
    if (term.is_zero()) break;
    if (!ctx.truncated() && y.truncation() < 0 && i > 256)
      throw std::domain_error("exp_q does not terminate; set a truncation order");
    result += term * exp_coefficient(ctx, i);
  }
  return result;
}

/// F = exp_q(t D1 (x) D2).
inline TensorElement udf_element(const HopfPtr& alg, int truncation = -1) {
  return exp_q(TensorElement::pure(alg, {HopfMonomial::d1(), HopfMonomial::d2()}, 1, std::nullopt, truncation));
}

namespace detail {

inline CheckResult compare_tensors(const std::string& name, const TensorElement& lhs, const TensorElement& rhs) {
  if (lhs == rhs) return CheckResult::pass(name);
  TensorElement diff = lhs - rhs;
  const auto& [k, c] = *diff.terms().begin();
  auto coeff = [&](const TensorElement& x) {
    auto it = x.terms().find(k);
    return it == x.terms().end() ? std::string("0") : it->second.str();
  };
  return CheckResult::fail(name, {"coefficient of [" + lhs.key_str(k) + "]", coeff(lhs), coeff(rhs)});
}

inline CheckResult compare_elements(const std::string& name, const HopfElement& lhs, const HopfElement& rhs) {
  if (lhs == rhs) return CheckResult::pass(name);
  return CheckResult::fail(name, {name, lhs.str(), rhs.str()});
}

inline std::vector<std::pair<std::string, HopfElement>> generators(const HopfPtr& alg) {
  return {{"D1", HopfElement::d1(alg)},
          {"D2", HopfElement::d2(alg)},
          {"sigma", HopfElement::sigma(alg, 1)},
          {"sigma^-1", HopfElement::sigma(alg, -1)}};
}

/// Multiplies the slots of a 2-tensor together (no t allowed).
inline HopfElement multiply_slots(const TensorElement& x) {
  HopfElement out(x.algebra());
  for (const auto& [k, c] : x.terms()) {
    out += HopfElement::monomial(x.algebra(), k.slot[0]) * HopfElement::monomial(x.algebra(), k.slot[1]) * c;
  }
  return out;
}

inline CheckResult hopf_axioms_in(const HopfPtr& alg, const std::string& label) {
  const Scalar q = alg->ctx().q();
  const HopfElement d1 = HopfElement::d1(alg), d2 = HopfElement::d2(alg);
  const HopfElement s = HopfElement::sigma(alg, 1), si = HopfElement::sigma(alg, -1);
  const TensorElement Dd1 = coproduct(d1), Dd2 = coproduct(d2), Ds = coproduct(s), Dsi = coproduct(si);

  std::vector<CheckResult> results;
  // Delta, epsilon, S respect the defining relations.
  results.push_back(compare_tensors("Delta(D1)Delta(D2) = Delta(D2)Delta(D1)", Dd1 * Dd2, Dd2 * Dd1));
  results.push_back(compare_tensors("q Delta(sigma)Delta(D1) = Delta(D1)Delta(sigma)", q * (Ds * Dd1), Dd1 * Ds));
  results.push_back(compare_tensors("q Delta(sigma)Delta(D2) = Delta(D2)Delta(sigma)", q * (Ds * Dd2), Dd2 * Ds));
  results.push_back(compare_tensors("Delta(sigma)Delta(sigma^-1) = 1", Ds * Dsi, TensorElement::one(alg, 2)));
  const HopfElement S1 = antipode(d1), S2 = antipode(d2), Ss = antipode(s), Ssi = antipode(si);
  results.push_back(compare_elements("S(D2)S(D1) = S(D1)S(D2)", S2 * S1, S1 * S2));
  results.push_back(compare_elements("q S(D1)S(sigma) = S(sigma)S(D1)", q * (S1 * Ss), Ss * S1));
  results.push_back(compare_elements("q S(D2)S(sigma) = S(sigma)S(D2)", q * (S2 * Ss), Ss * S2));
  results.push_back(compare_elements("S(sigma^-1)S(sigma) = 1", Ssi * Ss, HopfElement::one(alg)));
  if (alg->is_quotient()) {
    const int l = *alg->ctx().ell();
    results.push_back(compare_tensors("Delta(D1)^l = 0", detail::tensor_power(Dd1, l), TensorElement(alg, 2)));
    results.push_back(compare_tensors("Delta(D2)^l = 0", detail::tensor_power(Dd2, l), TensorElement(alg, 2)));
    results.push_back(compare_elements("S(D1)^l = 0", power(S1, l), HopfElement(alg)));
    results.push_back(compare_elements("S(D2)^l = 0", power(S2, l), HopfElement(alg)));
  }
  for (const auto& [gname, x] : generators(alg)) {
    const TensorElement Dx = coproduct(x);
    results.push_back(compare_tensors("coassociativity on " + gname, apply_coproduct(Dx, 0), apply_coproduct(Dx, 1)));
    results.push_back(compare_tensors("(eps (x) id)Delta = id on " + gname, apply_counit(Dx, 0), as_tensor(x)));
    results.push_back(compare_tensors("(id (x) eps)Delta = id on " + gname, apply_counit(Dx, 1), as_tensor(x)));
    const HopfElement unit = HopfElement::one(alg) * counit(x);
    const HopfElement left = multiply_slots(map_slot(Dx, 0, 1, [&](const HopfMonomial& m) {
      return as_tensor(antipode(alg, m));
    }));
    const HopfElement right = multiply_slots(map_slot(Dx, 1, 1, [&](const HopfMonomial& m) {
      return as_tensor(antipode(alg, m));
    }));
    results.push_back(compare_elements("sum S(x1)x2 = eps(x) on " + gname, left, unit));
    results.push_back(compare_elements("sum x1 S(x2) = eps(x) on " + gname, right, unit));
  }
  for (auto& r : results)
    if (!r) return std::move(r).as(label + ": " + r.name);
  return CheckResult::pass(label);
}

}  // namespace detail

/// Bialgebra and antipode axioms on the generators, plus compatibility of
/// Delta and S with the defining relations, in the given presentation.
inline CheckResult hopf_axiom_check(const HopfPtr& alg) {
  std::string label = alg->is_quotient() ? "Hopf axioms in H_q" : "Hopf axioms in H";
  if (alg->sigma_order()) label += "/(sigma^" + std::to_string(*alg->sigma_order()) + " - 1)";
  return detail::hopf_axioms_in(alg, label);
}

/// hopf_axiom_check in H and, at roots of unity, in H_q.
inline CheckResult hopf_axiom_check(const QContext& ctx) {
  CheckResult r = detail::hopf_axioms_in(HopfAlgebra::full(ctx), "Hopf axioms in H");
  if (!r || !ctx.truncated()) return r;
  return detail::hopf_axioms_in(HopfAlgebra::h_q(ctx), "Hopf axioms in H_q");
}

/// In the full algebra H: Delta(D_i^l) in I(x)H + H(x)I, eps(D_i^l) = 0 and
/// S(D_i^l) in I, where I = (D1^l, D2^l) is spanned by the normal-form
/// monomials with a >= l or b >= l.
inline CheckResult hopf_ideal_check(const QContext& ctx) {
  if (!ctx.truncated()) throw std::invalid_argument("hopf_ideal_check needs a primitive l-th root of unity, l >= 2");
  const int l = *ctx.ell();
  const HopfPtr alg = HopfAlgebra::full(ctx);
  auto in_ideal = [l](const HopfMonomial& m) { return m.a >= l || m.b >= l; };
  const std::array<HopfMonomial, 2> gens{HopfMonomial::d1(l), HopfMonomial::d2(l)};
  for (const HopfMonomial& g : gens) {
    const std::string label = g.str();
    const TensorElement D = coproduct(alg, g);
    for (const auto& [k, c] : D.terms()) {
      if (!in_ideal(k.slot[0]) && !in_ideal(k.slot[1]))
        return CheckResult::fail("Delta(I) in I(x)H + H(x)I",
                                 {"Delta(" + label + ")", c.str() + "*[" + D.key_str(k) + "]", "0"});
    }
    if (!counit(alg, g).is_zero()) return CheckResult::fail("eps(I) = 0", {label, counit(alg, g).str(), "0"});
    const HopfElement S = antipode(alg, g);
    for (const auto& [m, c] : S.terms()) {
      if (!in_ideal(m)) return CheckResult::fail("S(I) in I", {"S(" + label + ")", S.str(), "element of I"});
    }
  }
  return CheckResult::pass("D1^l, D2^l generate a Hopf ideal");
}

enum class ExpProductOutcome { holds, hypotheses_violated, conclusion_failed };

struct ExpProductReport {
  ExpProductOutcome outcome;
  CheckResult detail;
  explicit operator bool() const { return outcome == ExpProductOutcome::holds; }
};

/// exp_q(y+z) = exp_q(y) exp_q(z) given zy = q yz and, at a primitive l-th
/// root of unity, y^i z^{l-i} = 0 for 0 <= i <= l. Hypotheses are checked
/// first and reported separately from the conclusion.
inline ExpProductReport expq_product_check(const TensorElement& y, const TensorElement& z) {
  const QContext& ctx = y.algebra()->ctx();
  CheckResult comm = detail::compare_tensors("zy = q yz", z * y, ctx.q() * (y * z));
  if (!comm) return {ExpProductOutcome::hypotheses_violated, comm};
  if (ctx.truncated()) {
    const int l = *ctx.ell();
    const TensorElement zero(y.algebra(), y.arity(), y.truncation());
    for (int i = 0; i <= l; ++i) {
      TensorElement p = detail::tensor_power(y, i) * detail::tensor_power(z, l - i);
      CheckResult r = detail::compare_tensors("y^" + std::to_string(i) + " z^" + std::to_string(l - i) + " = 0", p, zero);
      if (!r) return {ExpProductOutcome::hypotheses_violated, r};
    }
  }
  CheckResult concl = detail::compare_tensors("exp_q(y+z) = exp_q(y)exp_q(z)", exp_q(y + z), exp_q(y) * exp_q(z));
  return {concl ? ExpProductOutcome::holds : ExpProductOutcome::conclusion_failed, concl};
}

/// The chain of equalities that takes [(Delta(x)id)F](F(x)1) to
/// [(id(x)Delta)F](1(x)F). Entry k compares expression k with expression k+1.
inline std::vector<CheckResult> udf_proof_chain(const QContext& ctx, int truncation = 6) {
  const HopfPtr alg = HopfAlgebra::h_q(ctx);
  const int K = ctx.truncated() ? -1 : truncation;
  using M = HopfMonomial;
  const TensorElement F = udf_element(alg, K);
  const TensorElement y = TensorElement::pure(alg, {M::d1(), M::sigma(), M::d2()}, 1, std::nullopt, K);
  const TensorElement z = TensorElement::pure(alg, {M{}, M::d1(), M::d2()}, 1, std::nullopt, K);
  const TensorElement w = TensorElement::pure(alg, {M::d1(), M::d2(), M{}}, 1, std::nullopt, K);
  const TensorElement base = TensorElement::pure(alg, {M::d1(), M::d2()}, 1, std::nullopt, K);

  std::vector<std::pair<std::string, TensorElement>> exprs;
  exprs.emplace_back("[(Delta(x)id)F](F(x)1)", apply_coproduct(F, 0) * insert_unit(F, 2));
  exprs.emplace_back("exp_q((Delta(x)id)(tD1(x)D2)) exp_q(tD1(x)D2(x)1)", exp_q(apply_coproduct(base, 0)) * exp_q(w));
  exprs.emplace_back("exp_q(y+z) exp_q(w)", exp_q(y + z) * exp_q(w));
  exprs.emplace_back("exp_q(y) exp_q(z) exp_q(w)", exp_q(y) * exp_q(z) * exp_q(w));
  exprs.emplace_back("exp_q(y) exp_q(w) exp_q(z)", exp_q(y) * exp_q(w) * exp_q(z));
  exprs.emplace_back("exp_q(y+w) exp_q(z)", exp_q(y + w) * exp_q(z));
  exprs.emplace_back("exp_q((id(x)Delta)(tD1(x)D2)) (1(x)F)", exp_q(apply_coproduct(base, 1)) * insert_unit(F, 0));
  exprs.emplace_back("[(id(x)Delta)F](1(x)F)", apply_coproduct(F, 1) * insert_unit(F, 0));

  std::vector<CheckResult> steps;
  for (std::size_t k = 0; k + 1 < exprs.size(); ++k) {
    steps.push_back(
        detail::compare_tensors(exprs[k].first + " = " + exprs[k + 1].first, exprs[k].second, exprs[k + 1].second));
  }
  return steps;
}

/// exp_q(t D1 (x) D2) satisfies (eps(x)id)F = 1(x)1 = (id(x)eps)F and
/// [(Delta(x)id)F](F(x)1) = [(id(x)Delta)F](1(x)F) in H_q. Exact at roots of
/// unity; otherwise compared through t^truncation.
inline CheckResult udf_check(const QContext& ctx, int truncation = 6) {
  const HopfPtr alg = HopfAlgebra::h_q(ctx);
  const int K = ctx.truncated() ? -1 : truncation;
  const TensorElement F = udf_element(alg, K);
  const TensorElement one1 = TensorElement::one(alg, 1, K);
  if (auto r = detail::compare_tensors("(eps(x)id)F = 1", apply_counit(F, 0), one1); !r) return r;
  if (auto r = detail::compare_tensors("(id(x)eps)F = 1", apply_counit(F, 1), one1); !r) return r;
  const TensorElement lhs = apply_coproduct(F, 0) * insert_unit(F, 2);
  const TensorElement rhs = apply_coproduct(F, 1) * insert_unit(F, 0);
  CheckResult r = detail::compare_tensors("[(Delta(x)id)F](F(x)1) = [(id(x)Delta)F](1(x)F)", lhs, rhs);
  if (!r) return r;
  std::string label = "exp_q(tD1(x)D2) is a universal deformation formula";
  if (!ctx.truncated()) label += " through t^" + std::to_string(truncation);
  return CheckResult::pass(label);
}

}  // namespace qdeform

#endif  // QDEFORM_HOPF_HPP
