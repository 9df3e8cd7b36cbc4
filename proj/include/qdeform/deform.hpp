#ifndef QDEFORM_DEFORM_HPP
#define QDEFORM_DEFORM_HPP

// Star products a*b = sum t^{i_1+...+i_m} prod 1/(i_f)_{q_f}! (prod D1^{i_f})(a) (prod D2^{i_f})(b)
// built from one or more factors, with associativity, Hochschild-cocycle
// and Hecke-relation extraction on top.

#include "qdeform/action.hpp"
#include "qdeform/check.hpp"
#include "qdeform/crossed.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

class StarError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Polynomial in t with crossed-product coefficients.
class TPoly {
public:
  explicit TPoly(AlgebraPtr alg) : alg_(std::move(alg)), zero_(alg_) {}
  static TPoly constant(const CPElement& a) {
    TPoly p(a.algebra());
    p.add(0, a);
    return p;
  }

  const AlgebraPtr& algebra() const { return alg_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const CPElement& coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : zero_;
  }
  const std::vector<CPElement>& coeffs() const { return coeffs_; }

  void add(int k, const CPElement& a) { add_scaled(k, a, Scalar(alg_->field(), 1)); }
  void add_scaled(int k, const CPElement& a, const Scalar& c) {
    if (a.is_zero() || c.is_zero()) return;
    while (static_cast<int>(coeffs_.size()) <= k) coeffs_.emplace_back(alg_);
    coeffs_[k].add_scaled(a, c);
    trim();
  }

  TPoly& operator+=(const TPoly& o) {
    for (int k = 0; k <= o.degree(); ++k) add(k, o.coeffs_[k]);
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    for (int k = 0; k <= o.degree(); ++k) add_scaled(k, o.coeffs_[k], Scalar(alg_->field(), -1));
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// The value at t = t0.
  CPElement specialize(const Scalar& t0) const {
    CPElement out(alg_);
    Scalar p(alg_->field(), 1);
    for (const auto& c : coeffs_) {
      out.add_scaled(c, p);
      p *= t0;
    }
    return out;
  }

  /// e.g. "x1 x2 + t^1 * (g(1,0))".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int k = 0; k <= degree(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += k == 0 ? coeffs_[k].str() : "t^" + std::to_string(k) + " * (" + coeffs_[k].str() + ")";
    }
    return out;
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  AlgebraPtr alg_;
  CPElement zero_;
  std::vector<CPElement> coeffs_;
};

/// The star product of a list of factors, applied as nested operators with
/// the last factor innermost. Construction enforces the precondition: the
/// factors' operators pairwise commute, or the list is a (g, g^-1) pair
/// satisfying the mixed relations.
class StarProduct {
public:
  static StarProduct create(std::vector<DeformFactor> factors, int check_degree = 3) {
    if (factors.empty()) throw StarError("star product needs at least one factor");
    for (const auto& f : factors) {
      if (f.algebra().get() != factors.front().algebra().get())
        throw StarError("factors act on different algebras");
      if (auto v = f.violation()) throw StarError("factor " + f.str() + ": " + *v);
    }
    if (factors.size() > 1) {
      CheckResult comm = check_commuting_factors(factors, check_degree);
      if (!comm) {
        const bool mixed = factors.size() == 2 && factors[1].g() == factors[0].algebra()->group().inv(factors[0].g());
        if (!mixed || !check_mixed_relations(factors[0], factors[1], check_degree))
          throw StarError("factors do not commute: " + comm.name +
                          (comm.witness ? " fails on " + comm.witness->input : std::string()));
      }
    }
    return StarProduct(std::move(factors));
  }

  const AlgebraPtr& algebra() const { return factors_.front().algebra(); }
  const std::vector<DeformFactor>& factors() const { return factors_; }
  const FactorOperators& operators(std::size_t k) const { return ops_[k]; }

  TPoly operator()(const CPElement& a, const CPElement& b) const {
    TPoly out(algebra());
    expand(static_cast<int>(factors_.size()) - 1, a, b, 0, Scalar(algebra()->field(), 1), out);
    return out;
  }

  /// t-bilinear extension to polynomial inputs.
  TPoly operator()(const TPoly& a, const TPoly& b) const {
    TPoly out(algebra());
    for (int i = 0; i <= a.degree(); ++i)
      for (int j = 0; j <= b.degree(); ++j) {
        const TPoly p = (*this)(a.coeff(i), b.coeff(j));
        for (int k = 0; k <= p.degree(); ++k) out.add(i + j + k, p.coeff(k));
      }
    return out;
  }

  /// 1/(i)_q! of factor k, or nullopt once the truncated exponential ends.
  std::optional<Scalar> exp_coeff(std::size_t k, int i) const {
    const QContext& ctx = factors_[k].ctx();
    if (ctx.truncated() && i >= *ctx.ell()) return std::nullopt;
    auto& cache = coeff_cache_[k];
    while (static_cast<int>(cache.size()) <= i) cache.push_back(exp_coefficient(ctx, static_cast<long long>(cache.size())));
    return cache[i];
  }

private:
  explicit StarProduct(std::vector<DeformFactor> factors)
      : factors_(std::move(factors)), coeff_cache_(factors_.size()) {
    for (const auto& f : factors_) ops_.push_back(make_operators(f));
  }

  void expand(int k, const CPElement& a, const CPElement& b, int tdeg, const Scalar& coef, TPoly& out) const {
    if (k < 0) {
      out.add_scaled(tdeg, a * b, coef);
      return;
    }
    CPElement ai = a, bi = b;
    for (int i = 0;; ++i) {
      if (ai.is_zero() || bi.is_zero()) break;
      const auto c = exp_coeff(static_cast<std::size_t>(k), i);
      if (!c) break;
      expand(k - 1, ai, bi, tdeg + i, coef * *c, out);
      ai = ops_[k].d1(ai);
      bi = ops_[k].d2(bi);
    }
  }

  std::vector<DeformFactor> factors_;
  std::vector<FactorOperators> ops_;
  mutable std::vector<std::vector<Scalar>> coeff_cache_;
};

/// a * b for the given factors.
inline TPoly star(const std::vector<DeformFactor>& factors, const CPElement& a, const CPElement& b) {
  const int d = std::max({3, a.degree(), b.degree()});
  return StarProduct::create(factors, d)(a, b);
}

/// (a*b)*c = a*(b*c) for every basis triple with deg(a)+deg(b)+deg(c) <= d
/// and all group parts.
inline CheckResult check_associativity(const StarProduct& sp, int d) {
  const AlgebraPtr& alg = sp.algebra();
  std::map<std::pair<BasisKey, BasisKey>, TPoly> cache;
  auto basis_star = [&](const BasisKey& x, const BasisKey& y) -> const TPoly& {
    auto it = cache.find({x, y});
    if (it == cache.end())
      it = cache.emplace(std::pair{x, y}, sp(CPElement::basis(alg, x.mono, x.group), CPElement::basis(alg, y.mono, y.group)))
               .first;
    return it->second;
  };
  // Bilinear extension through the basis cache.
  auto star_tp = [&](const TPoly& p, const BasisKey& y, bool left) {
    TPoly out(alg);
    for (int i = 0; i <= p.degree(); ++i)
      for (const auto& [k, c] : p.coeff(i).terms()) {
        const TPoly& r = left ? basis_star(k, y) : basis_star(y, k);
        for (int j = 0; j <= r.degree(); ++j) out.add_scaled(i + j, r.coeff(j), c);
      }
    return out;
  };
  const auto keys = basis_keys(*alg, d);
  const std::string name = "associativity of the star product";
  for (const auto& a : keys)
    for (const auto& b : keys) {
      if (a.mono.degree() + b.mono.degree() > d) continue;
      const TPoly ab = basis_star(a, b);
      for (const auto& c : keys) {
        if (a.mono.degree() + b.mono.degree() + c.mono.degree() > d) continue;
        const TPoly lhs = star_tp(ab, c, true);
        const TPoly rhs = star_tp(basis_star(b, c), a, false);
        if (!(lhs == rhs))
          return CheckResult::fail(name,
                                   {"(a,b,c) = (" + detail::basis_str(*alg, a) + ", " + detail::basis_str(*alg, b) + ", " +
                                        detail::basis_str(*alg, c) + ")",
                                    lhs.str(), rhs.str()},
                                   d);
      }
    }
  return CheckResult::pass(name, d);
}

/// A bilinear map on the crossed product, given on basis pairs.
class BilinearMap {
public:
  using Rule = std::function<CPElement(const CPElement&, const CPElement&)>;

  BilinearMap(AlgebraPtr alg, Rule basis_rule) : alg_(std::move(alg)), rule_(std::move(basis_rule)) {}

  CPElement operator()(const CPElement& a, const CPElement& b) const {
    CPElement out(alg_);
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        const CPElement v = rule_(CPElement::basis(alg_, ka.mono, ka.group), CPElement::basis(alg_, kb.mono, kb.group));
        out.add_scaled(v, ca * cb);
      }
    return out;
  }

  const AlgebraPtr& algebra() const { return alg_; }

private:
  AlgebraPtr alg_;
  Rule rule_;
};

/// m o (D1 (x) D2) for a factor.
inline BilinearMap operator_cocycle(const DeformFactor& f) {
  const auto ops = std::make_shared<const FactorOperators>(make_operators(f));
  return BilinearMap(f.algebra(), [ops](const CPElement& a, const CPElement& b) { return ops->d1(a) * ops->d2(b); });
}

/// mu(a,b)c + mu(ab,c) = mu(a,bc) + a mu(b,c) on basis triples with
/// deg(a)+deg(b)+deg(c) <= d.
inline CheckResult check_hochschild_cocycle(const BilinearMap& mu, int d) {
  const AlgebraPtr& alg = mu.algebra();
  const auto keys = basis_keys(*alg, d);
  const std::string name = "Hochschild two-cocycle identity";
  std::vector<CPElement> elts;
  for (const auto& k : keys) elts.push_back(CPElement::basis(alg, k.mono, k.group));
  for (std::size_t x = 0; x < keys.size(); ++x)
    for (std::size_t y = 0; y < keys.size(); ++y) {
      if (keys[x].mono.degree() + keys[y].mono.degree() > d) continue;
      const CPElement& a = elts[x];
      const CPElement& b = elts[y];
      const CPElement mu_ab = mu(a, b);
      const CPElement ab = a * b;
      for (std::size_t z = 0; z < keys.size(); ++z) {
        if (keys[x].mono.degree() + keys[y].mono.degree() + keys[z].mono.degree() > d) continue;
        const CPElement& c = elts[z];
        const CPElement lhs = mu_ab * c + mu(ab, c);
        const CPElement rhs = mu(a, b * c) + a * mu(b, c);
        if (!(lhs == rhs))
          return CheckResult::fail(name,
                                   {"(a,b,c) = (" + detail::basis_str(*alg, keys[x]) + ", " + detail::basis_str(*alg, keys[y]) + ", " +
                                        detail::basis_str(*alg, keys[z]) + ")",
                                    lhs.str(), rhs.str()},
                                   d);
      }
    }
  return CheckResult::pass(name, d);
}

/// x_v x_w - x_w x_v = sum_g a_g(v,w) t g-bar, read off from the t-linear
/// part of x_v*x_w - x_w*x_v. Components maps a group index to the
/// polynomial a_g(v,w).
struct HeckeRelation {
  int v;
  int w;
  std::map<int, CPElement> components;
  bool hecke = true;  // false when some factor has nonconstant s

  std::string str(const CrossedProduct& alg) const {
    std::string lhs = "x" + std::to_string(v + 1) + " x" + std::to_string(w + 1) + " - x" + std::to_string(w + 1) +
                      " x" + std::to_string(v + 1);
    std::string rhs;
    for (const auto& [g, p] : components) {
      if (!rhs.empty()) rhs += " + ";
      rhs += "t * (" + p.str() + ") * " + alg.group().element(g).str();
    }
    return lhs + " = " + (rhs.empty() ? "0" : rhs) + (hecke ? "" : "  [non-Hecke: s is not constant]");
  }
};

inline HeckeRelation hecke_relation(const StarProduct& sp, int v, int w) {
  const AlgebraPtr& alg = sp.algebra();
  const int n = alg->dimension();
  const CPElement xv = CPElement::basis(alg, Monomial::variable(n, v), alg->group().identity());
  const CPElement xw = CPElement::basis(alg, Monomial::variable(n, w), alg->group().identity());
  const CPElement linear = (sp(xv, xw) - sp(xw, xv)).coeff(1);
  HeckeRelation rel{v, w, {}, true};
  for (const auto& f : sp.factors())
    for (const auto& [k, c] : f.s().terms())
      if (k.mono.degree() != 0) rel.hecke = false;
  for (const auto& [k, c] : linear.terms()) {
    auto it = rel.components.try_emplace(k.group, alg).first;
    it->second.add_term({k.mono, alg->group().identity()}, c);
  }
  return rel;
}

/// One relation per coordinate pair v < w.
inline std::vector<HeckeRelation> hecke_relations(const StarProduct& sp) {
  std::vector<HeckeRelation> out;
  const int n = sp.algebra()->dimension();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) out.push_back(hecke_relation(sp, v, w));
  return out;
}

}  // namespace qdeform

#endif  // QDEFORM_DEFORM_HPP
