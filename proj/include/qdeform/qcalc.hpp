#ifndef QDEFORM_QCALC_HPP
#define QDEFORM_QCALC_HPP

// q-integers, q-factorials, q-binomials and q-exponential coefficients.

#include "qdeform/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdeform {

/// A nonzero q together with its multiplicative order (nullopt = infinite).
class QContext {
public:
  explicit QContext(Scalar q) : q_(std::move(q)), ell_(multiplicative_order(q_)) {}

  static QContext root_of_unity(int ell) { return QContext(zeta_power(ScalarField::cyclotomic(ell), 1)); }
  static QContext generic() { return QContext(Scalar::q_variable(ScalarField::generic())); }

  const Scalar& q() const { return q_; }
  ScalarField field() const { return q_.field(); }
  std::optional<int> ell() const { return ell_; }
  /// q is a primitive l-th root of unity with l >= 2; exp_q is then a finite sum.
  bool truncated() const { return ell_ && *ell_ >= 2; }
  Scalar zero() const { return Scalar(field()); }
  Scalar one() const { return Scalar(field(), 1); }

  QContext inverse() const { return QContext(q_.inverse()); }

private:
  Scalar q_;
  std::optional<int> ell_;
};

/// (i)_q = 1 + q + ... + q^{i-1}, with (0)_q = 0.
inline Scalar q_integer(const QContext& ctx, long long i) {
  if (i < 0) throw std::invalid_argument("q_integer: negative index");
  Scalar sum = ctx.zero();
  Scalar power = ctx.one();
  for (long long j = 0; j < i; ++j) {
    sum += power;
    power *= ctx.q();
  }
  return sum;
}

inline Scalar q_factorial(const QContext& ctx, long long i) {
  if (i < 0) throw std::invalid_argument("q_factorial: negative index");
  Scalar f = ctx.one();
  for (long long j = 2; j <= i; ++j) f *= q_integer(ctx, j);
  return f;
}

/// Binomial coefficient [k choose i]_q via the division-free recurrence
/// [k,i] = [k-1,i-1] + q^i [k-1,i]; well defined at roots of unity.
inline Scalar q_binomial(const QContext& ctx, long long k, long long i) {
  if (i < 0 || k < i) throw std::out_of_range("q_binomial: need k >= i >= 0");
  std::vector<Scalar> row{ctx.one()};  // row[j] = [m, j]_q
  for (long long m = 1; m <= k; ++m) {
    std::vector<Scalar> next;
    next.reserve(static_cast<std::size_t>(m) + 1);
    for (long long j = 0; j <= m; ++j) {
      Scalar v = ctx.zero();
      if (j >= 1) v += row[j - 1];
      if (j < m) v += ctx.q().pow(j) * row[j];
      next.push_back(std::move(v));
    }
    row = std::move(next);
  }
  return row[i];
}

/// Coefficient 1/(i)_q! of y^i in exp_q(y). Throws when i >= l at a root of
/// unity of order l, where the truncated exponential has no such term.
inline Scalar exp_coefficient(const QContext& ctx, long long i) {
  if (ctx.truncated() && i >= *ctx.ell()) throw std::out_of_range("exp_q has no term of this degree");
  return q_factorial(ctx, i).inverse();
}

/// Normal-form element of the quantum plane k<y,z>/(zy - q yz), basis y^a z^b.
class QuantumPlaneElement {
public:
  explicit QuantumPlaneElement(QContext ctx) : ctx_(std::move(ctx)) {}

  static QuantumPlaneElement monomial(const QContext& ctx, int a, int b, Scalar c) {
    QuantumPlaneElement e(ctx);
    if (!c.is_zero()) e.terms_.emplace(std::make_pair(a, b), std::move(c));
    return e;
  }

  const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }

  void add_term(std::pair<int, int> key, const Scalar& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  QuantumPlaneElement operator+(const QuantumPlaneElement& o) const {
    QuantumPlaneElement r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
  }

  // (y^a z^b)(y^c z^d) = q^{bc} y^{a+c} z^{b+d}
  QuantumPlaneElement operator*(const QuantumPlaneElement& o) const {
    QuantumPlaneElement r(ctx_);
    for (const auto& [k1, c1] : terms_) {
      for (const auto& [k2, c2] : o.terms_) {
        r.add_term({k1.first + k2.first, k1.second + k2.second},
                   ctx_.q().pow(static_cast<long long>(k1.second) * k2.first) * c1 * c2);
      }
    }
    return r;
  }

  friend bool operator==(const QuantumPlaneElement& a, const QuantumPlaneElement& b) {
    return a.terms_ == b.terms_;
  }

private:
  QContext ctx_;
  std::map<std::pair<int, int>, Scalar> terms_;
};

/// Expands (y+z)^k in the quantum plane and compares against
/// sum_i [k,i]_q y^i z^{k-i}.
inline bool q_binomial_formula_check(const QContext& ctx, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  const auto y = QuantumPlaneElement::monomial(ctx, 1, 0, ctx.one());
  const auto z = QuantumPlaneElement::monomial(ctx, 0, 1, ctx.one());
  const auto sum = y + z;
  auto lhs = QuantumPlaneElement::monomial(ctx, 0, 0, ctx.one());
  for (int i = 0; i < k; ++i) lhs = lhs * sum;
  QuantumPlaneElement rhs(ctx);
  for (int i = 0; i <= k; ++i) rhs.add_term({i, k - i}, q_binomial(ctx, k, i));
  return lhs == rhs;
}

}  // namespace qdeform

#endif  // QDEFORM_QCALC_HPP
