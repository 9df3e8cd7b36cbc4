#ifndef QDEFORM_COHOMOLOGY_HPP
#define QDEFORM_COHOMOLOGY_HPP

// Bar and Koszul complexes of S(V), the comparison maps psi_1 and psi_2,
// degree-two classes (e_i ^ e_j)* (x) s g-bar, their cocycles on the crossed
// product, G-invariance and HH^2 component counts.

#include "qdeform/action.hpp"
#include "qdeform/check.hpp"
#include "qdeform/crossed.hpp"
#include "qdeform/deform.hpp"
#include "qdeform/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

class ClassError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string rational_coef_str(const Rational& c, bool first) {
  std::string out;
  Rational a = c;
  if (a < 0) {
    out = first ? "-" : " - ";
    a = -a;
  } else if (!first) {
    out = " + ";
  }
  if (a != 1) out += rational_str(a) + " * ";
  return out;
}

}  // namespace detail

/// a_0 (x) m_1 (x) ... (x) m_k (x) a_{k+1} with monomial slots.
class BarChain {
public:
  using Key = std::vector<Monomial>;

  BarChain(int n, int degree) : n_(n), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("bar degree must be nonnegative");
  }

  static BarChain basis(const Key& slots, const Rational& c = 1) {
    BarChain b(slots.front().size(), static_cast<int>(slots.size()) - 2);
    b.add(slots, c);
    return b;
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Key& k, const Rational& c) {
    if (static_cast<int>(k.size()) != degree_ + 2) throw std::invalid_argument("bar tensor has the wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  BarChain& operator+=(const BarChain& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  friend bool operator==(const BarChain& a, const BarChain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      out += detail::rational_coef_str(c, out.empty());
      for (std::size_t i = 0; i < k.size(); ++i) out += (i ? " (x) " : "") + k[i].str();
    }
    return out;
  }

private:
  int n_;
  int degree_;
  std::map<Key, Rational> terms_;
};

/// sum_j (-1)^j a_0 (x) ... (x) a_j a_{j+1} (x) ...
inline BarChain bar_differential(const BarChain& c) {
  if (c.degree() < 1) throw std::invalid_argument("bar differential needs degree >= 1");
  BarChain out(c.n(), c.degree() - 1);
  for (const auto& [k, coef] : c.terms())
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
      BarChain::Key r;
      for (std::size_t i = 0; i < k.size(); ++i) {
        if (i == j + 1) continue;
        r.push_back(i == j ? k[j] * k[j + 1] : k[i]);
      }
      out.add(r, j % 2 ? -coef : coef);
    }
  return out;
}

/// e_{i_1} ^ ... ^ e_{i_m} (x) a (x) b with increasing wedge indices.
struct KoszulKey {
  std::vector<int> wedge;
  Monomial left;
  Monomial right;
  friend auto operator<=>(const KoszulKey&, const KoszulKey&) = default;
  friend bool operator==(const KoszulKey&, const KoszulKey&) = default;
};

class KoszulChain {
public:
  KoszulChain(int n, int degree) : n_(n), degree_(degree) {
    if (degree < 0 || degree > n) throw std::invalid_argument("Koszul degree out of range");
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const std::map<KoszulKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c e_{w_1} ^ ... ^ e_{w_m} (x) a (x) b, sorting the wedge with sign.
  void add(std::vector<int> wedge, const Monomial& a, const Monomial& b, Rational c) {
    if (static_cast<int>(wedge.size()) != degree_) throw std::invalid_argument("wedge has the wrong length");
    for (std::size_t i = 0; i < wedge.size(); ++i)
      for (std::size_t j = 0; j + 1 < wedge.size() - i; ++j)
        if (wedge[j] > wedge[j + 1]) {
          std::swap(wedge[j], wedge[j + 1]);
          c = -c;
        }
    if (std::adjacent_find(wedge.begin(), wedge.end()) != wedge.end() || c == 0) return;
    KoszulKey k{std::move(wedge), a, b};
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
  }

  /// Coefficient of e_i ^ e_j as a sum of a (x) b terms, signed for i > j.
  std::map<std::pair<Monomial, Monomial>, Rational> wedge_coefficient(int i, int j) const {
    std::map<std::pair<Monomial, Monomial>, Rational> out;
    if (degree_ != 2 || i == j) return out;
    const std::vector<int> w{std::min(i, j), std::max(i, j)};
    const Rational sign = i < j ? 1 : -1;
    for (const auto& [k, c] : terms_)
      if (k.wedge == w) out[{k.left, k.right}] += sign * c;
    return out;
  }

  friend bool operator==(const KoszulChain& a, const KoszulChain& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      out += detail::rational_coef_str(c, out.empty());
      std::string w;
      for (int i : k.wedge) w += (w.empty() ? "e" : "^e") + std::to_string(i + 1);
      out += (w.empty() ? "" : w + " (x) ") + k.left.str() + " (x) " + k.right.str();
    }
    return out;
  }

private:
  int n_;
  int degree_;
  std::map<KoszulKey, Rational> terms_;
};

/// sum_k (-1)^{k+1} e_{..omit i_k..} (x) (x_{i_k} a (x) b - a (x) b x_{i_k}).
inline KoszulChain koszul_differential(const KoszulChain& c) {
  if (c.degree() < 1) throw std::invalid_argument("Koszul differential needs degree >= 1");
  KoszulChain out(c.n(), c.degree() - 1);
  for (const auto& [k, coef] : c.terms())
    for (std::size_t p = 0; p < k.wedge.size(); ++p) {
      std::vector<int> rest;
      for (std::size_t r = 0; r < k.wedge.size(); ++r)
        if (r != p) rest.push_back(k.wedge[r]);
      const Rational sign = p % 2 ? -coef : coef;
      const Monomial x = Monomial::variable(c.n(), k.wedge[p]);
      out.add(rest, x * k.left, k.right, sign);
      out.add(rest, k.left, k.right * x, -sign);
    }
  return out;
}

/// Degree-0 Koszul chains are elements of S(V)^e; identifies them with
/// degree-0 bar chains.
inline BarChain koszul_to_bar0(const KoszulChain& c) {
  if (c.degree() != 0) throw std::invalid_argument("expected a degree-0 Koszul chain");
  BarChain out(c.n(), 0);
  for (const auto& [k, coef] : c.terms()) out.add({k.left, k.right}, coef);
  return out;
}

/// Multiplication S(V)^e -> S(V), as a map of degree-0 bar chains.
inline std::map<Monomial, Rational> augmentation(const BarChain& c) {
  if (c.degree() != 0) throw std::invalid_argument("augmentation needs degree 0");
  std::map<Monomial, Rational> out;
  for (const auto& [k, coef] : c.terms()) {
    auto& v = out[k[0] * k[1]];
    v += coef;
    if (v == 0) out.erase(k[0] * k[1]);
  }
  return out;
}

/// Coordinate order used by the comparison maps: order[p] is the coordinate
/// playing the role of x_{p+1} in the formulas. Empty means the identity.
using CoordOrder = std::vector<int>;

namespace detail {

inline CoordOrder resolve_order(int n, const CoordOrder& order) {
  if (order.empty()) {
    CoordOrder id(n);
    std::iota(id.begin(), id.end(), 0);
    return id;
  }
  CoordOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i)
      throw std::invalid_argument("coordinate order must be a permutation");
  return order;
}

/// Monomial with exponent e[p] on coordinate order[p].
inline Monomial placed(const CoordOrder& order, const std::vector<int>& e) {
  Monomial m(static_cast<int>(order.size()));
  for (std::size_t p = 0; p < order.size(); ++p) m.set(order[p], e[p]);
  return m;
}

}  // namespace detail

/// psi_1 on a (x) m (x) b, extended S(V)^e-linearly from 1 (x) m (x) 1:
///   sum_i sum_{p=1}^{k_i} e_i (x) x_i^{k_i-p} x_{i+1}^{k_{i+1}}...x_n^{k_n} (x) x_1^{k_1}...x_{i-1}^{k_{i-1}} x_i^{p-1}.
inline KoszulChain psi1(const BarChain& c, const CoordOrder& order_in = {}) {
  if (c.degree() != 1) throw std::invalid_argument("psi1 needs a degree-1 bar chain");
  const int n = c.n();
  const CoordOrder order = detail::resolve_order(n, order_in);
  KoszulChain out(n, 1);
  for (const auto& [key, coef] : c.terms()) {
    std::vector<int> k(n);
    for (int p = 0; p < n; ++p) k[p] = key[1][order[p]];
    for (int i = 0; i < n; ++i)
      for (int p = 1; p <= k[i]; ++p) {
        std::vector<int> l(n, 0), r(n, 0);
        l[i] = k[i] - p;
        for (int t = i + 1; t < n; ++t) l[t] = k[t];
        for (int t = 0; t < i; ++t) r[t] = k[t];
        r[i] = p - 1;
        out.add({order[i]}, key[0] * detail::placed(order, l), detail::placed(order, r) * key[2], coef);
      }
  }
  return out;
}

/// psi_2 on a (x) m (x) m' (x) b, extended from 1 (x) m (x) m' (x) 1:
///   sum_{i<j} sum_{r=1}^{m_j} sum_{p=1}^{k_i} e_i ^ e_j
///     (x) x_i^{k_i-p} x_{i+1}^{k_{i+1}}...x_{j-1}^{k_{j-1}} x_j^{k_j+m_j-r} x_{j+1}^{k_{j+1}+m_{j+1}}...x_n^{k_n+m_n}
///     (x) x_1^{k_1+m_1}...x_{i-1}^{k_{i-1}+m_{i-1}} x_i^{m_i+p-1} x_{i+1}^{m_{i+1}}...x_{j-1}^{m_{j-1}} x_j^{r-1}.
inline KoszulChain psi2(const BarChain& c, const CoordOrder& order_in = {}) {
  if (c.degree() != 2) throw std::invalid_argument("psi2 needs a degree-2 bar chain");
  const int n = c.n();
  const CoordOrder order = detail::resolve_order(n, order_in);
  KoszulChain out(n, 2);
  for (const auto& [key, coef] : c.terms()) {
    std::vector<int> k(n), m(n);
    for (int p = 0; p < n; ++p) {
      k[p] = key[1][order[p]];
      m[p] = key[2][order[p]];
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int r = 1; r <= m[j]; ++r)
          for (int p = 1; p <= k[i]; ++p) {
            std::vector<int> l(n, 0), rr(n, 0);
            l[i] = k[i] - p;
            for (int t = i + 1; t < j; ++t) l[t] = k[t];
            l[j] = k[j] + m[j] - r;
            for (int t = j + 1; t < n; ++t) l[t] = k[t] + m[t];
            for (int t = 0; t < i; ++t) rr[t] = k[t] + m[t];
            rr[i] = m[i] + p - 1;
            for (int t = i + 1; t < j; ++t) rr[t] = m[t];
            rr[j] = r - 1;
            out.add({order[i], order[j]}, key[0] * detail::placed(order, l), detail::placed(order, rr) * key[3], coef);
          }
  }
  return out;
}

/// Exactness at degree 0 for both complexes, d1 psi1 = delta1 and
/// d2 psi2 = psi1 delta2 on all bar basis tensors with middle slots of
/// degree <= d.
inline CheckResult check_chain_map(int n, int d, const CoordOrder& order = {}) {
  const std::string name = "psi is a chain map (n = " + std::to_string(n) + ")";
  const auto monos = monomials_up_to(n, d);
  const Monomial one(n);
  for (const auto& a : monos) {
    const BarChain b1 = BarChain::basis({one, a, one});
    const BarChain lhs = koszul_to_bar0(koszul_differential(psi1(b1, order)));
    const BarChain rhs = bar_differential(b1);
    if (!(lhs == rhs)) return CheckResult::fail(name, {"d1 psi1 on " + b1.str(), lhs.str(), rhs.str()}, d);
    if (!augmentation(rhs).empty()) return CheckResult::fail(name, {"m delta1 on " + b1.str(), "nonzero", "0"}, d);
  }
  for (const auto& a : monos)
    for (const auto& b : monos) {
      const BarChain b2 = BarChain::basis({one, a, b, one});
      const KoszulChain lhs = koszul_differential(psi2(b2, order));
      const KoszulChain rhs = psi1(bar_differential(b2), order);
      if (!(lhs == rhs)) return CheckResult::fail(name, {"d2 psi2 on " + b2.str(), lhs.str(), rhs.str()}, d);
    }
  return CheckResult::pass(name, d);
}

namespace detail {

// Calls f on every tuple of `slots` monomials in n variables with total degree <= d.
template <class F>
void for_each_slots(int n, int slots, int d, BarChain::Key& acc, F&& f) {
  if (static_cast<int>(acc.size()) == slots) {
    f(acc);
    return;
  }
  for (const auto& m : monomials_up_to(n, d)) {
    acc.push_back(m);
    for_each_slots(n, slots, d - m.degree(), acc, f);
    acc.pop_back();
  }
}

}  // namespace detail

/// delta o delta = 0 on bar basis tensors of degree 2 and 3, total degree <= d.
inline CheckResult check_bar_square_zero(int n, int d) {
  const std::string name = "bar differential squares to zero (n = " + std::to_string(n) + ")";
  std::optional<Witness> w;
  for (int k : {2, 3}) {
    BarChain::Key acc;
    detail::for_each_slots(n, k + 2, d, acc, [&](const BarChain::Key& key) {
      if (w) return;
      const BarChain sq = bar_differential(bar_differential(BarChain::basis(key)));
      if (!sq.is_zero()) w = Witness{BarChain::basis(key).str(), sq.str(), "0"};
    });
  }
  return w ? CheckResult::fail(name, *w, d) : CheckResult::pass(name, d);
}

/// d o d = 0 on Koszul basis elements of every wedge degree >= 2, total degree <= d.
inline CheckResult check_koszul_square_zero(int n, int d) {
  const std::string name = "Koszul differential squares to zero (n = " + std::to_string(n) + ")";
  for (int p = 2; p <= n; ++p) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + p, true);
    do {
      std::vector<int> wedge;
      for (int i = 0; i < n; ++i)
        if (pick[i]) wedge.push_back(i);
      for (const auto& a : monomials_up_to(n, d))
        for (const auto& b : monomials_up_to(n, d - a.degree())) {
          KoszulChain c(n, p);
          c.add(wedge, a, b, 1);
          const KoszulChain sq = koszul_differential(koszul_differential(c));
          if (!sq.is_zero()) return CheckResult::fail(name, {c.str(), sq.str(), "0"}, d);
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return CheckResult::pass(name, d);
}

/// (e_i ^ e_j)* (x) s g-bar for a diagonal g.
class CohomologyClass {
public:
  /// Enforces det(g) = 1, non-fixed coordinates exactly {i, j}, s a nonzero
  /// polynomial in the fixed coordinates, and the semi-invariant condition.
  static CohomologyClass create(AlgebraPtr alg, int g, int i, int j, CPElement s) {
    CohomologyClass c(std::move(alg), g, i, j, std::move(s));
    if (auto v = c.violation()) throw ClassError(*v);
    return c;
  }
  static CohomologyClass unchecked(AlgebraPtr alg, int g, int i, int j, CPElement s) {
    return CohomologyClass(std::move(alg), g, i, j, std::move(s));
  }
  static CohomologyClass for_factor(const DeformFactor& f) {
    return create(f.algebra(), f.g(), f.i(), f.j(), f.s());
  }

  const AlgebraPtr& algebra() const { return alg_; }
  int g() const { return g_; }
  int i() const { return i_; }
  int j() const { return j_; }
  const CPElement& s() const { return s_; }

  std::optional<std::string> violation() const {
    const GroupSpec& G = alg_->group();
    const int n = alg_->dimension();
    if (alg_->has_nilpotency()) return "classes need the free symmetric algebra";
    if (g_ < 0 || g_ >= G.size()) return "group element out of range";
    if (i_ < 0 || j_ < 0 || i_ >= n || j_ >= n || i_ == j_) return "bad coordinate pair";
    const auto fixed = G.fixed_coordinates(g_);
    if (static_cast<int>(fixed.size()) != n - 2 || std::count(fixed.begin(), fixed.end(), i_) ||
        std::count(fixed.begin(), fixed.end(), j_))
      return "codim V^g must be 2 with the pair as the moved coordinates";
    if (!G.determinant(g_).is_one()) return "det(g) must be 1";
    if (s_.is_zero()) return "s must be nonzero";
    for (const auto& [k, c] : s_.terms()) {
      if (k.group != G.identity()) return "s must lie in S(V)";
      if (k.mono[i_] || k.mono[j_]) return "s must lie in the fixed coordinates";
    }
    if (auto h = first_noninvariant()) return "s fails the semi-invariant condition at h = " + G.element(*h).str();
    return std::nullopt;
  }

  /// h(s) = x_i(h) x_j(h) alpha(g,h) alpha(h,g)^-1 s fails first at this h.
  std::optional<int> first_noninvariant() const {
    const GroupSpec& G = alg_->group();
    for (int h = 0; h < G.size(); ++h) {
      const Scalar c = G.character_value(h, i_) * G.character_value(h, j_) * alg_->alpha()(g_, h) *
                       alg_->alpha()(h, g_).inverse();
      if (!(act_on_polynomial(h, s_) == s_ * c)) return h;
    }
    return std::nullopt;
  }

  std::string str() const {
    return "(e" + std::to_string(i_ + 1) + "^e" + std::to_string(j_ + 1) + ")* (x) (" + s_.str() + ") " +
           alg_->group().element(g_).str();
  }

  /// Order putting the pair first, then the remaining coordinates.
  CoordOrder coordinate_order() const {
    CoordOrder o{i_, j_};
    for (int t = 0; t < alg_->dimension(); ++t)
      if (t != i_ && t != j_) o.push_back(t);
    return o;
  }

private:
  CohomologyClass(AlgebraPtr alg, int g, int i, int j, CPElement s)
      : alg_(std::move(alg)), g_(g), i_(i), j_(j), s_(std::move(s)) {}

  AlgebraPtr alg_;
  int g_, i_, j_;
  CPElement s_;
};

/// mu(p1 h-bar, p2 k-bar) = (f o psi_2)(1 (x) p1 (x) h(p2) (x) 1) h-bar k-bar, where
/// f reads the e_i ^ e_j coefficient a (x) b and returns a s g-bar b. psi_2 is
/// taken in the order (i, j, rest).
inline BilinearMap class_to_cocycle(const CohomologyClass& cls) {
  if (auto v = cls.violation()) throw ClassError(*v);
  const AlgebraPtr alg = cls.algebra();
  const CoordOrder order = cls.coordinate_order();
  const CPElement sg = cls.s() * CPElement::group_unit(alg, cls.g());
  const int i = cls.i(), j = cls.j();
  return BilinearMap(alg, [alg, order, sg, i, j](const CPElement& a, const CPElement& b) {
    const auto& [ka, ca] = *a.terms().begin();
    const auto& [kb, cb] = *b.terms().begin();
    const int n = alg->dimension();
    const Monomial one(n);
    const CPElement hp2 = act_on_polynomial(ka.group, CPElement::basis(alg, kb.mono, alg->group().identity()));
    const CPElement tail = CPElement::group_unit(alg, ka.group) * CPElement::group_unit(alg, kb.group);
    CPElement out(alg);
    for (const auto& [kp, cp] : hp2.terms()) {
      const KoszulChain k = psi2(BarChain::basis({one, ka.mono, kp.mono, one}), order);
      for (const auto& [lr, c] : k.wedge_coefficient(i, j)) {
        const CPElement left = CPElement::basis(alg, lr.first, alg->group().identity());
        const CPElement right = CPElement::basis(alg, lr.second, alg->group().identity());
        out.add_scaled(left * sg * right * tail, cp * Scalar(alg->field(), c));
      }
    }
    return out * (ca * cb);
  });
}

/// class_to_cocycle(cls)(a,b) = D1(a) D2(b) on basis pairs with
/// deg(a) + deg(b) <= d.
inline CheckResult check_class_equals_operator_cocycle(const CohomologyClass& cls, const DeformFactor& f, int d) {
  const std::string name = "class cocycle equals m o (D1 (x) D2)";
  if (cls.algebra().get() != f.algebra().get()) return CheckResult::fail_note(name, "different algebras", d);
  const BilinearMap mu = class_to_cocycle(cls);
  const BilinearMap op = operator_cocycle(f);
  const AlgebraPtr& alg = f.algebra();
  for (const auto& [ka, kb] : basis_pairs(*alg, d)) {
    const CPElement a = CPElement::basis(alg, ka.mono, ka.group);
    const CPElement b = CPElement::basis(alg, kb.mono, kb.group);
    const CPElement lhs = mu(a, b), rhs = op(a, b);
    if (!(lhs == rhs))
      return CheckResult::fail(
          name, {"(a,b) = (" + detail::basis_str(*alg, ka) + ", " + detail::basis_str(*alg, kb) + ")", lhs.str(), rhs.str()},
          d);
  }
  return CheckResult::pass(name, d);
}

/// The five expressions of the invariance computation for one h:
///   x_i(h^-1) x_j(h^-1) h(s) h-bar g-bar (h-bar)^-1
///   alpha(g,h) alpha(h,g)^-1 s h-bar g-bar (h-bar)^-1
///   alpha(g,h) s (hg)-bar (h-bar)^-1
///   alpha(g,h) alpha(h,h^-1)^-1 alpha(hg,h^-1) s (hgh^-1)-bar
///   s g-bar
inline std::vector<CPElement> invariance_chain(const CohomologyClass& cls, int h) {
  const AlgebraPtr& alg = cls.algebra();
  const GroupSpec& G = alg->group();
  const TwoCocycle& a = alg->alpha();
  const int g = cls.g(), hi = G.inv(h), hg = G.mul(h, g);
  const CPElement& s = cls.s();
  const CPElement hinv = group_unit_inverse(alg, h);
  const Scalar twist = G.character_value(hi, cls.i()) * G.character_value(hi, cls.j());
  return {
      act_on_polynomial(h, s) * conjugate(h, CPElement::group_unit(alg, g)) * twist,
      s * CPElement::group_unit(alg, h) * CPElement::group_unit(alg, g) * hinv * (a(g, h) * a(h, g).inverse()),
      s * CPElement::group_unit(alg, hg) * hinv * a(g, h),
      s * CPElement::group_unit(alg, G.mul(hg, hi)) * (a(g, h) * a(h, hi).inverse() * a(hg, hi)),
      s * CPElement::group_unit(alg, g),
  };
}

/// Every h in G fixes the class; reports the first broken step.
inline CheckResult check_invariance(const CohomologyClass& cls) {
  const std::string name = "G-invariance of " + cls.str();
  const GroupSpec& G = cls.algebra()->group();
  for (int h = 0; h < G.size(); ++h) {
    const auto chain = invariance_chain(cls, h);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      if (!(chain[k] == chain[k + 1]))
        return CheckResult::fail(name,
                                 {"h = " + G.element(h).str() + ", step " + std::to_string(k + 1), chain[k].str(),
                                  chain[k + 1].str()});
  }
  return CheckResult::pass(name);
}

struct HH2Component {
  int g;
  std::size_t dimension = 0;
  std::vector<std::string> basis;
  std::optional<std::string> reason;  // "codimension" or "determinant" when ruled out
};

/// Degree-two part of the g-component, with the S(V^g) factor cut at degree d.
inline HH2Component hh2_component(const AlgebraPtr& alg, int g, int d) {
  const GroupSpec& G = alg->group();
  const int n = alg->dimension();
  HH2Component out{g, 0, {}, std::nullopt};
  const auto fixed = G.fixed_coordinates(g);
  const int codim = n - static_cast<int>(fixed.size());
  if (codim != 0 && codim != 2) {
    out.reason = "codimension";
    return out;
  }
  if (!G.determinant(g).is_one()) {
    out.reason = "determinant";
    return out;
  }
  std::vector<std::pair<int, int>> pairs;
  if (codim == 2) {
    std::vector<int> moved;
    for (int t = 0; t < n; ++t)
      if (!std::count(fixed.begin(), fixed.end(), t)) moved.push_back(t);
    pairs.push_back({moved[0], moved[1]});
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.push_back({a, b});
  }
  for (const auto& [i, j] : pairs)
    for (const auto& m : monomials_in(n, fixed, d)) {
      const auto cls = CohomologyClass::unchecked(alg, g, i, j, CPElement::basis(alg, m, G.identity()));
      if (check_invariance(cls)) out.basis.push_back(cls.str());
    }
  out.dimension = out.basis.size();
  return out;
}

}  // namespace qdeform

#endif  // QDEFORM_COHOMOLOGY_HPP
