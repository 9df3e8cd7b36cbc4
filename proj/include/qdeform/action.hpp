#ifndef QDEFORM_ACTION_HPP
#define QDEFORM_ACTION_HPP

// The operators sigma, D1, D2 on S(V) #_alpha G attached to a central g that
// scales x_i by q and x_j by q^{-1}, and the sweeps that verify they give an
// H_q-module algebra.

#include "qdeform/check.hpp"
#include "qdeform/crossed.hpp"
#include "qdeform/qcalc.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

class FactorError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// All basis elements x^m h-bar with deg(m) <= d, in canonical order.
inline std::vector<BasisKey> basis_keys(const CrossedProduct& alg, int d) {
  std::vector<BasisKey> out;
  for (const Monomial& m : monomials_up_to(alg.dimension(), d)) {
    if (alg.vanishes(m)) continue;
    for (int h = 0; h < alg.group().size(); ++h) out.push_back({m, h});
  }
  return out;
}

/// Pairs (a, b) of basis elements with deg(a) + deg(b) <= d.
inline std::vector<std::pair<BasisKey, BasisKey>> basis_pairs(const CrossedProduct& alg, int d) {
  const auto keys = basis_keys(alg, d);
  std::vector<std::pair<BasisKey, BasisKey>> out;
  for (const auto& a : keys)
    for (const auto& b : keys)
      if (a.mono.degree() + b.mono.degree() <= d) out.emplace_back(a, b);
  return out;
}

/// One factor (g, (i, j), q, s). The coordinates i and j play the roles of
/// x1 and x2; s is a polynomial in the remaining coordinates.
class DeformFactor {
public:
  /// Validated construction; throws FactorError naming the violated condition.
  static DeformFactor create(AlgebraPtr alg, int g, int i, int j, Scalar q, CPElement s) {
    DeformFactor f(std::move(alg), g, i, j, std::move(q), std::move(s));
    if (auto err = f.violation()) throw FactorError(*err);
    return f;
  }
  /// q is read off as the eigenvalue of g on x_i.
  static DeformFactor create(AlgebraPtr alg, int g, int i, int j, CPElement s) {
    if (i < 0 || i >= alg->dimension()) throw FactorError("pair: coordinate out of range");
    Scalar q = alg->group().character_value(g, i);
    return create(std::move(alg), g, i, j, std::move(q), std::move(s));
  }
  /// No validation; for negative tests.
  static DeformFactor unchecked(AlgebraPtr alg, int g, int i, int j, Scalar q, CPElement s) {
    return DeformFactor(std::move(alg), g, i, j, std::move(q), std::move(s));
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int g() const { return g_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const Scalar& q() const { return q_; }
  const QContext& ctx() const { return ctx_; }
  const CPElement& s() const { return s_; }

  /// First violated condition, if any.
  std::optional<std::string> violation() const {
    const CrossedProduct& A = *alg_;
    const GroupSpec& G = A.group();
    const int n = A.dimension();
    if (A.has_nilpotency()) return "factor needs the free polynomial algebra (no nilpotency bounds)";
    if (g_ < 0 || g_ >= G.size()) return "g is not a group element";
    if (i_ < 0 || i_ >= n || j_ < 0 || j_ >= n || i_ == j_) return "pair must name two distinct coordinates";
    const Scalar qinv = q_.inverse();
    for (int k = 0; k < n; ++k) {
      const Scalar& ev = G.character_value(g_, k);
      const Scalar& want = k == i_ ? q_ : (k == j_ ? qinv : G.zeta(0));
      if (!(ev == want)) {
        return "g must scale x" + std::to_string(i_ + 1) + " by q, x" + std::to_string(j_ + 1) +
               " by q^-1 and fix the other coordinates (x" + std::to_string(k + 1) + " is scaled by " + ev.str() + ")";
      }
    }
    if (s_.is_zero()) return "s must be nonzero";
    for (const auto& [key, c] : s_.terms()) {
      if (key.group != G.identity()) return "s must have trivial group part";
      if (key.mono[i_] != 0 || key.mono[j_] != 0)
        return "s must be a polynomial in the coordinates outside the pair";
    }
    for (int h = 0; h < G.size(); ++h) {
      const CPElement lhs = act_on_polynomial(h, s_);
      const CPElement rhs = s_ * semi_invariant_character(h);
      if (!(lhs == rhs))
        return "s fails the semi-invariant condition h(s) = x_i(h) x_j(h) alpha(g,h) alpha(h,g)^-1 s at h = " +
               G.element(h).str();
    }
    return std::nullopt;
  }

  /// x_i(h) x_j(h) alpha(g,h) / alpha(h,g).
  Scalar semi_invariant_character(int h) const {
    const GroupSpec& G = alg_->group();
    return G.character_value(h, i_) * G.character_value(h, j_) * alg_->alpha()(g_, h) / alg_->alpha()(h, g_);
  }

  /// (k)_q and (k)_{q^{-1}} for k >= 0.
  const Scalar& q_int(int k) const { return table(qint_, k, ctx_); }
  const Scalar& q_inv_int(int k) const { return table(qinvint_, k, ctx_.inverse()); }
  const Scalar& q_power(int k) const {
    if (k >= 0 && k < static_cast<int>(qpow_->size())) return (*qpow_)[k];
    extend_powers(k);
    return (*qpow_)[k];
  }

  std::string str() const {
    return alg_->group().element(g_).str() + "; pair=" + std::to_string(i_ + 1) + "," + std::to_string(j_ + 1) +
           "; q=" + q_.str() + "; s=" + s_.str();
  }

private:
  DeformFactor(AlgebraPtr alg, int g, int i, int j, Scalar q, CPElement s)
      : alg_(std::move(alg)),
        g_(g),
        i_(i),
        j_(j),
        q_(q),
        ctx_(q),
        s_(std::move(s)),
        qint_(std::make_shared<std::vector<Scalar>>()),
        qinvint_(std::make_shared<std::vector<Scalar>>()),
        qpow_(std::make_shared<std::vector<Scalar>>()) {
    if (q_.is_zero()) throw FactorError("q must be nonzero");
    for (int k = 0; k < 24; ++k) {
      qint_->push_back(q_integer(ctx_, k));
      qinvint_->push_back(q_integer(ctx_.inverse(), k));
      qpow_->push_back(q_.pow(k));
    }
  }

  static const Scalar& table(const std::shared_ptr<std::vector<Scalar>>& t, int k, const QContext& ctx) {
    while (static_cast<int>(t->size()) <= k) t->push_back(q_integer(ctx, static_cast<long long>(t->size())));
    return (*t)[k];
  }
  void extend_powers(int k) const {
    while (static_cast<int>(qpow_->size()) <= k) qpow_->push_back(qpow_->back() * q_);
  }

  AlgebraPtr alg_;
  int g_, i_, j_;
  Scalar q_;
  QContext ctx_;
  CPElement s_;
  // Lookup tables, grown on demand. Sweeps are single-threaded per factor.
  std::shared_ptr<std::vector<Scalar>> qint_, qinvint_, qpow_;
};

/// A linear operator on the crossed product, given by its rule on basis elements.
class LinOperator {
public:
  /// Adds c * T(key) to out.
  using Rule = std::function<void(const BasisKey&, const Scalar&, CPElement&)>;

  LinOperator(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

  const std::string& name() const { return name_; }

  CPElement operator()(const CPElement& x) const {
    CPElement out(x.algebra());
    for (const auto& [k, c] : x.terms()) rule_(k, c, out);
    return out;
  }
  void accumulate(const BasisKey& k, const Scalar& c, CPElement& out) const { rule_(k, c, out); }

  /// this after other.
  LinOperator after(const LinOperator& other) const {
    LinOperator self = *this;
    return LinOperator(name_ + " " + other.name_, [self, other](const BasisKey& k, const Scalar& c, CPElement& out) {
      CPElement mid(out.algebra());
      other.accumulate(k, c, mid);
      for (const auto& [mk, mc] : mid.terms()) self.accumulate(mk, mc, out);
    });
  }

  LinOperator power(int k) const {
    LinOperator self = *this;
    return LinOperator(name_ + "^" + std::to_string(k), [self, k](const BasisKey& key, const Scalar& c, CPElement& out) {
      CPElement cur(out.algebra());
      cur.add_term(key, c);
      for (int r = 0; r < k && !cur.is_zero(); ++r) cur = self(cur);
      out += cur;
    });
  }

private:
  std::string name_;
  Rule rule_;
};

struct FactorOperators {
  LinOperator d1;
  LinOperator d2;
  LinOperator sigma;
  LinOperator sigma_inv;
};

/// D1(x^m h) = x_i(h^-1) (m_i)_q x^{m - e_i} h
/// D2(x^m h) = q^{m_i} (m_j)_{q^-1} x^{m - e_j} s g-bar h-bar
/// sigma(x^m h) = x_i(h^-1) q^{m_i} x^m h
inline FactorOperators make_operators(const DeformFactor& f) {
  const auto fp = std::make_shared<const DeformFactor>(f);
  const std::string tag = "^" + f.algebra()->group().element(f.g()).str();

  LinOperator d1("D1" + tag, [fp](const BasisKey& k, const Scalar& c, CPElement& out) {
    const int mi = k.mono[fp->i()];
    if (mi == 0) return;
    const GroupSpec& G = fp->algebra()->group();
    out.add_term({k.mono.lowered(fp->i()), k.group},
                 c * G.character_value(G.inv(k.group), fp->i()) * fp->q_int(mi));
  });

  LinOperator d2("D2" + tag, [fp](const BasisKey& k, const Scalar& c, CPElement& out) {
    const int mj = k.mono[fp->j()];
    if (mj == 0) return;
    const CrossedProduct& A = *fp->algebra();
    const GroupSpec& G = A.group();
    const Monomial base = k.mono.lowered(fp->j());
    const Scalar coef = c * fp->q_power(k.mono[fp->i()]) * fp->q_inv_int(mj) * A.alpha()(fp->g(), k.group);
    const int gh = G.mul(fp->g(), k.group);
    for (const auto& [sk, sc] : fp->s().terms()) out.add_term({base * sk.mono, gh}, coef * sc);
  });

  LinOperator sigma("sigma" + tag, [fp](const BasisKey& k, const Scalar& c, CPElement& out) {
    const GroupSpec& G = fp->algebra()->group();
    out.add_term(k, c * G.character_value(G.inv(k.group), fp->i()) * fp->q_power(k.mono[fp->i()]));
  });

  LinOperator sigma_inv("sigma^-1" + tag, [fp](const BasisKey& k, const Scalar& c, CPElement& out) {
    const GroupSpec& G = fp->algebra()->group();
    out.add_term(k, c * G.character_value(k.group, fp->i()) / fp->q_power(k.mono[fp->i()]));
  });

  return {std::move(d1), std::move(d2), std::move(sigma), std::move(sigma_inv)};
}

namespace detail {

inline std::string key_str(const CrossedProduct& alg, const BasisKey& k) { return basis_str(alg, k); }

/// lhs(x) == rhs(x) for every basis element of degree <= d.
inline CheckResult operator_identity(const std::string& name, const AlgebraPtr& alg, int d,
                                     const std::function<CPElement(const CPElement&)>& lhs,
                                     const std::function<CPElement(const CPElement&)>& rhs) {
  for (const BasisKey& k : basis_keys(*alg, d)) {
    const CPElement x = CPElement::basis(alg, k.mono, k.group);
    const CPElement l = lhs(x), r = rhs(x);
    if (!(l == r)) return CheckResult::fail(name, {key_str(*alg, k), l.str(), r.str()}, d);
  }
  return CheckResult::pass(name, d);
}

/// A B = c B A as operators.
inline CheckResult q_commutation(const AlgebraPtr& alg, int d, const LinOperator& A, const LinOperator& B,
                                 const Scalar& c, const std::string& cname) {
  const std::string name = A.name() + " " + B.name() + " = " + (cname.empty() ? "" : cname + " ") + B.name() + " " +
                           A.name();
  return operator_identity(
      name, alg, d, [&](const CPElement& x) { return A(B(x)); }, [&](const CPElement& x) { return B(A(x)) * c; });
}

/// T(ab) = sum of products, over basis pairs with deg(a) + deg(b) <= d.
inline CheckResult product_rule(const std::string& name, const AlgebraPtr& alg, int d,
                                const std::function<CPElement(const CPElement&, const CPElement&)>& lhs,
                                const std::function<CPElement(const CPElement&, const CPElement&)>& rhs) {
  for (const auto& [ka, kb] : basis_pairs(*alg, d)) {
    const CPElement a = CPElement::basis(alg, ka.mono, ka.group);
    const CPElement b = CPElement::basis(alg, kb.mono, kb.group);
    const CPElement l = lhs(a, b), r = rhs(a, b);
    if (!(l == r))
      return CheckResult::fail(name, {"(a,b) = (" + key_str(*alg, ka) + ", " + key_str(*alg, kb) + ")", l.str(), r.str()},
                               d);
  }
  return CheckResult::pass(name, d);
}

inline CheckResult first_failure(std::vector<CheckResult> results, std::string summary, int d) {
  for (auto& r : results)
    if (!r) return std::move(r);
  return CheckResult::pass(std::move(summary), d);
}

}  // namespace detail

/// D1(ab) = D1(a) sigma(b) + a D1(b) and D2(ab) = D2(a) b + sigma(a) D2(b)
/// for basis pairs with deg(a) + deg(b) <= d.
inline CheckResult check_skew_derivations(const DeformFactor& f, int d) {
  const auto ops = make_operators(f);
  const AlgebraPtr& alg = f.algebra();
  std::vector<CheckResult> rs;
  rs.push_back(detail::product_rule(
      "D1(ab) = D1(a) sigma(b) + a D1(b)", alg, d, [&](const CPElement& a, const CPElement& b) { return ops.d1(a * b); },
      [&](const CPElement& a, const CPElement& b) { return ops.d1(a) * ops.sigma(b) + a * ops.d1(b); }));
  if (rs.back()) {
    rs.push_back(detail::product_rule(
        "D2(ab) = D2(a) b + sigma(a) D2(b)", alg, d,
        [&](const CPElement& a, const CPElement& b) { return ops.d2(a * b); },
        [&](const CPElement& a, const CPElement& b) { return ops.d2(a) * b + ops.sigma(a) * ops.d2(b); }));
  }
  return detail::first_failure(std::move(rs), "skew derivations for " + f.str(), d);
}

/// The defining relations of H_q hold as operator identities on basis
/// elements of degree <= d, and sigma, sigma^-1, D1, D2 satisfy
/// h(ab) = sum h_1(a) h_2(b) and h(1) = eps(h) 1 on pairs with deg(a) + deg(b) <= d.
inline CheckResult check_module_algebra(const DeformFactor& f, int d) {
  const auto ops = make_operators(f);
  const AlgebraPtr& alg = f.algebra();
  const Scalar& q = f.q();
  const Scalar qinv = q.inverse();
  auto id = [](const CPElement& x) { return x; };
  std::vector<CheckResult> rs;
  rs.push_back(detail::q_commutation(alg, d, ops.d1, ops.d2, Scalar(alg->field(), 1), ""));
  rs.push_back(detail::q_commutation(alg, d, ops.sigma, ops.d1, qinv, "q^-1"));
  rs.push_back(detail::q_commutation(alg, d, ops.sigma, ops.d2, qinv, "q^-1"));
  rs.push_back(detail::operator_identity(
      "sigma sigma^-1 = id", alg, d, [&](const CPElement& x) { return ops.sigma(ops.sigma_inv(x)); }, id));
  rs.push_back(detail::operator_identity(
      "sigma^-1 sigma = id", alg, d, [&](const CPElement& x) { return ops.sigma_inv(ops.sigma(x)); }, id));
  if (f.ctx().truncated()) {
    const int l = *f.ctx().ell();
    const CPElement zero(alg);
    for (const LinOperator* D : {&ops.d1, &ops.d2}) {
      const LinOperator P = D->power(l);
      rs.push_back(detail::operator_identity(
          P.name() + " = 0", alg, d, [&](const CPElement& x) { return P(x); }, [&](const CPElement&) { return zero; }));
    }
  }
  const CPElement one = CPElement::one(alg);
  rs.push_back(detail::operator_identity(
      "D1(1) = 0, D2(1) = 0, sigma(1) = 1", alg, 0,
      [&](const CPElement&) { return ops.d1(one) + ops.d2(one) + ops.sigma(one); }, [&](const CPElement&) { return one; }));
  rs.push_back(detail::product_rule(
      "sigma(ab) = sigma(a) sigma(b)", alg, d, [&](const CPElement& a, const CPElement& b) { return ops.sigma(a * b); },
      [&](const CPElement& a, const CPElement& b) { return ops.sigma(a) * ops.sigma(b); }));
  rs.push_back(detail::product_rule(
      "sigma^-1(ab) = sigma^-1(a) sigma^-1(b)", alg, d,
      [&](const CPElement& a, const CPElement& b) { return ops.sigma_inv(a * b); },
      [&](const CPElement& a, const CPElement& b) { return ops.sigma_inv(a) * ops.sigma_inv(b); }));
  for (auto& r : rs)
    if (!r) return std::move(r);
  CheckResult skew = check_skew_derivations(f, d);
  if (!skew) return skew;
  return CheckResult::pass("H_q-module algebra for " + f.str(), d);
}

/// Monomials s in the coordinates outside {i, j} fixed by g, of degree <= d,
/// with h(s) = x_i(h) x_j(h) alpha(g,h) alpha(h,g)^-1 s for all h. Monomials
/// are simultaneous eigenvectors, so these span all solutions of degree <= d.
inline std::vector<Monomial> solve_semi_invariants(const GroupSpec& G, const TwoCocycle& alpha, int g, int i, int j,
                                                   int d) {
  const int n = G.dimension();
  std::vector<int> coords;
  for (int k = 0; k < n; ++k)
    if (k != i && k != j && G.character_exponent(g, k) == 0) coords.push_back(k);
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_in(n, coords, d)) {
    bool ok = true;
    for (int h = 0; h < G.size() && ok; ++h) {
      const Scalar want = G.character_value(h, i) * G.character_value(h, j) * alpha(g, h) / alpha(h, g);
      ok = G.zeta(G.monomial_character_exponent(h, m.exponents())) == want;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

/// Relations between the operators of a factor for g and one for g^-1 (same
/// pair, q replaced by q^-1):
///   D1' D1 = q D1 D1',  D2' D2 = q^-1 D2 D2',  D1 D2' = D2' D1,  D1' D2 = D2 D1',
///   sigma sigma' = sigma' sigma,  sigma D1' = q^-1 D1' sigma,  sigma D2' = q D2' sigma,
///   sigma' D1 = q D1 sigma',  sigma' D2 = q^-1 D2 sigma'.
inline CheckResult check_mixed_relations(const DeformFactor& f, const DeformFactor& finv, int d) {
  const AlgebraPtr& alg = f.algebra();
  const GroupSpec& G = alg->group();
  if (finv.algebra().get() != alg.get() || finv.g() != G.inv(f.g()) || finv.i() != f.i() || finv.j() != f.j() ||
      !(finv.q() == f.q().inverse()))
    return CheckResult::fail_note("mixed relations", "second factor must be g^-1 on the same pair with q^-1", d);
  if (!(alg->alpha()(f.g(), finv.g()) == alg->alpha()(finv.g(), f.g())))
    return CheckResult::fail_note("mixed relations", "needs alpha(g, g^-1) = alpha(g^-1, g)", d);
  const auto a = make_operators(f);
  const auto b = make_operators(finv);
  const Scalar& q = f.q();
  const Scalar qi = q.inverse();
  const Scalar one(alg->field(), 1);
  std::vector<CheckResult> rs;
  rs.push_back(detail::q_commutation(alg, d, b.d1, a.d1, q, "q"));
  rs.push_back(detail::q_commutation(alg, d, b.d2, a.d2, qi, "q^-1"));
  rs.push_back(detail::q_commutation(alg, d, a.d1, b.d2, one, ""));
  rs.push_back(detail::q_commutation(alg, d, b.d1, a.d2, one, ""));
  rs.push_back(detail::q_commutation(alg, d, a.sigma, b.sigma, one, ""));
  rs.push_back(detail::q_commutation(alg, d, a.sigma, b.d1, qi, "q^-1"));
  rs.push_back(detail::q_commutation(alg, d, a.sigma, b.d2, q, "q"));
  rs.push_back(detail::q_commutation(alg, d, b.sigma, a.d1, q, "q"));
  rs.push_back(detail::q_commutation(alg, d, b.sigma, a.d2, qi, "q^-1"));
  return detail::first_failure(std::move(rs), "g, g^-1 relations", d);
}

/// Every operator of one factor commutes with every operator of another.
inline CheckResult check_commuting_factors(const std::vector<DeformFactor>& factors, int d) {
  if (factors.empty()) return CheckResult::pass("commuting factors", d);
  const AlgebraPtr& alg = factors.front().algebra();
  std::vector<FactorOperators> ops;
  for (const auto& f : factors) {
    if (f.algebra().get() != alg.get()) throw std::invalid_argument("factors act on different algebras");
    ops.push_back(make_operators(f));
  }
  const Scalar one(alg->field(), 1);
  for (std::size_t x = 0; x < ops.size(); ++x)
    for (std::size_t y = x + 1; y < ops.size(); ++y)
      for (const LinOperator* A : {&ops[x].d1, &ops[x].d2, &ops[x].sigma})
        for (const LinOperator* B : {&ops[y].d1, &ops[y].d2, &ops[y].sigma}) {
          CheckResult r = detail::q_commutation(alg, d, *A, *B, one, "");
          if (!r) return r;
        }
  return CheckResult::pass("operators of distinct factors commute", d);
}

/// Factor for a seed of the cyclic-chain fixture; s defaults to 1.
inline DeformFactor factor_from_seed(const AlgebraPtr& alg, const FactorSeed& seed,
                                     std::optional<CPElement> s = std::nullopt) {
  return DeformFactor::create(alg, alg->group().index(seed.g), seed.i, seed.j, s ? *s : CPElement::one(alg));
}

/// The factor for g^-1 on the same pair with q^-1. Without an explicit s the
/// lowest semi-invariant monomial for g^-1 is used.
inline DeformFactor inverse_factor(const DeformFactor& f, std::optional<CPElement> s = std::nullopt) {
  const AlgebraPtr& alg = f.algebra();
  const GroupSpec& G = alg->group();
  const int gi = G.inv(f.g());
  if (!s) {
    const auto sols = solve_semi_invariants(G, alg->alpha(), gi, f.i(), f.j(), 2 * G.root_order());
    if (sols.empty()) throw FactorError("no semi-invariant s for g^-1 of low degree");
    s = CPElement::basis(alg, sols.front(), G.identity());
  }
  return DeformFactor::create(alg, gi, f.i(), f.j(), f.q().inverse(), *s);
}

/// Trivial group on V = span(x1, x2), g = 1, q = 1, s = 1: D1 and D2 are the
/// partial derivatives and sigma is the identity.
inline DeformFactor weyl_factor() {
  GroupSpec G({1}, 2, {{0, 0}}, ScalarField::cyclotomic(1));
  auto alg = make_algebra(G, TwoCocycle::trivial(G));
  return DeformFactor::create(alg, 0, 0, 1, CPElement::one(alg));
}

}  // namespace qdeform

#endif  // QDEFORM_ACTION_HPP
