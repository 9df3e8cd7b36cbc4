#ifndef QDEFORM_FINDIM_HPP
#define QDEFORM_FINDIM_HPP

// Finite-dimensional algebras given by structure constants, the four
// dimensional quiver algebra with its H_{-1} action, its deformation
// a*b = ab + t D1(a) D2(b), and radical/center invariants.

#include "qdeform/check.hpp"
#include "qdeform/crossed.hpp"
#include "qdeform/linalg.hpp"
#include "qdeform/scalar.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

class FinDimError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::string vec_str(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) detail::append_term(out, v[k], labels[k]);
  return out.empty() ? "0" : out;
}

/// Algebra with basis e_0..e_{n-1} and e_i e_j = sum_k c[i][j][k] e_k.
class FinDimAlgebra {
public:
  using Table = std::vector<std::vector<Vec>>;

  /// Validates associativity on all basis triples and the unit axioms.
  static FinDimAlgebra create(ScalarField F, std::vector<std::string> labels, Table c, Vec unit) {
    FinDimAlgebra A(F, std::move(labels), std::move(c), std::move(unit));
    if (auto bad = A.associativity_failure()) throw FinDimError("structure constants are not associative at " + *bad);
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (A.mul(A.unit_, A.basis(i)) != A.basis(i) || A.mul(A.basis(i), A.unit_) != A.basis(i))
        throw FinDimError("unit axiom fails at " + A.labels_[i]);
    return A;
  }

  std::size_t dim() const { return labels_.size(); }
  const ScalarField& field() const { return F_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const Vec& structure(std::size_t i, std::size_t j) const { return c_[i][j]; }

  Vec basis(std::size_t i) const {
    Vec v = zero_vec(F_, dim());
    v[i] = Scalar(F_, 1);
    return v;
  }

  Vec mul(const Vec& a, const Vec& b) const {
    Vec out = zero_vec(F_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j].is_zero()) continue;
        const Scalar ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!c_[i][j][k].is_zero()) out[k] += ab * c_[i][j][k];
      }
    }
    return out;
  }

  std::string str(const Vec& v) const { return vec_str(v, labels_); }

  /// Matrix of left multiplication by a (column k is a e_k).
  Mat left_mul(const Vec& a) const {
    Mat m(dim(), zero_vec(F_, dim()));
    for (std::size_t k = 0; k < dim(); ++k) {
      const Vec col = mul(a, basis(k));
      for (std::size_t r = 0; r < dim(); ++r) m[r][k] = col[r];
    }
    return m;
  }

  std::optional<std::string> associativity_failure() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
          if (mul(c_[i][j], basis(k)) != mul(basis(i), c_[j][k]))
            return "(" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")";
    return std::nullopt;
  }

private:
  FinDimAlgebra(ScalarField F, std::vector<std::string> labels, Table c, Vec unit)
      : F_(F), labels_(std::move(labels)), c_(std::move(c)), unit_(std::move(unit)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw FinDimError("algebra needs a nonempty basis");
    bool ok = c_.size() == n && unit_.size() == n;
    for (const auto& row : c_) {
      ok = ok && row.size() == n;
      for (const auto& v : row) ok = ok && v.size() == n;
    }
    if (!ok) throw FinDimError("structure constants have the wrong shape");
  }

  ScalarField F_;
  std::vector<std::string> labels_;
  Table c_;
  Vec unit_;
};

/// Linear operator as a matrix; column k is the image of e_k.
class OperatorMatrix {
public:
  OperatorMatrix(std::string name, Mat m) : name_(std::move(name)), m_(std::move(m)) {}

  static OperatorMatrix from_images(std::string name, const std::vector<Vec>& images) {
    const std::size_t n = images.size();
    Mat m(n, Vec{});
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) m[r].push_back(images[k][r]);
    return OperatorMatrix(std::move(name), std::move(m));
  }

  const std::string& name() const { return name_; }
  const Mat& matrix() const { return m_; }
  std::size_t dim() const { return m_.size(); }

  Vec operator()(const Vec& v) const {
    Vec out(dim(), Scalar(v.front().field()));
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t k = 0; k < dim(); ++k)
        if (!m_[r][k].is_zero() && !v[k].is_zero()) out[r] += m_[r][k] * v[k];
    return out;
  }

  /// this after other.
  OperatorMatrix after(const OperatorMatrix& o) const {
    std::vector<Vec> images;
    const ScalarField F = m_[0][0].field();
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec e = zero_vec(F, dim());
      e[k] = Scalar(F, 1);
      images.push_back((*this)(o(e)));
    }
    return from_images(name_ + o.name_, images);
  }

  OperatorMatrix scaled(const Scalar& c) const {
    Mat m = m_;
    for (auto& row : m)
      for (auto& x : row) x *= c;
    return OperatorMatrix(name_, std::move(m));
  }

  bool is_zero() const {
    for (const auto& row : m_)
      if (!is_zero_vec(row)) return false;
    return true;
  }

  bool invertible() const { return rank(m_, dim()) == dim(); }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) { return a.m_ == b.m_; }

private:
  std::string name_;
  Mat m_;
};

struct TaftFixture {
  FinDimAlgebra algebra;
  OperatorMatrix sigma;
  OperatorMatrix d1;
  OperatorMatrix d2;
};

/// Basis s0, s1, gamma0, gamma1 with s0 + s1 = 1, s_i idempotent
/// orthogonal, s_{i+1} gamma_i = gamma_i = gamma_i s_i, other products of
/// two basis elements zero. sigma(gamma_i) = -gamma_{i+1},
/// sigma(s_i) = s_{i+1}, D1(gamma_i) = s_{i+1}, D2(gamma_i) = s_i, D(s_j) = 0.
inline TaftFixture taft_fixture(ScalarField F = ScalarField::cyclotomic(2)) {
  const std::size_t n = 4;
  auto e = [&](std::size_t i) {
    Vec v = zero_vec(F, n);
    v[i] = Scalar(F, 1);
    return v;
  };
  auto s = [](int i) { return static_cast<std::size_t>(i % 2); };
  auto g = [](int i) { return static_cast<std::size_t>(2 + i % 2); };
  FinDimAlgebra::Table c(n, std::vector<Vec>(n, zero_vec(F, n)));
  for (int i = 0; i < 2; ++i) {
    c[s(i)][s(i)] = e(s(i));
    c[s(i + 1)][g(i)] = e(g(i));
    c[g(i)][s(i)] = e(g(i));
  }
  Vec unit = zero_vec(F, n);
  unit[0] = unit[1] = Scalar(F, 1);
  auto A = FinDimAlgebra::create(F, {"s0", "s1", "gamma0", "gamma1"}, std::move(c), std::move(unit));

  std::vector<Vec> sig(n), d1(n, zero_vec(F, n)), d2(n, zero_vec(F, n));
  for (int i = 0; i < 2; ++i) {
    sig[s(i)] = e(s(i + 1));
    sig[g(i)] = zero_vec(F, n);
    sig[g(i)][g(i + 1)] = Scalar(F, -1);
    d1[g(i)] = e(s(i + 1));
    d2[g(i)] = e(s(i));
  }
  return {std::move(A), OperatorMatrix::from_images("sigma", sig), OperatorMatrix::from_images("D1", d1),
          OperatorMatrix::from_images("D2", d2)};
}

/// H_{-1} relations on the operators plus the module-algebra law on basis
/// pairs, with
///   sigma(ab) = sigma(a)sigma(b), D1(ab) = D1(a)sigma(b) + aD1(b),
///   D2(ab) = D2(a)b + sigma(a)D2(b).
inline CheckResult check_hminus1_module_algebra(const FinDimAlgebra& A, const OperatorMatrix& sigma,
                                                const OperatorMatrix& d1, const OperatorMatrix& d2) {
  const std::string name = "H_{-1} module algebra";
  const Scalar minus_one(A.field(), -1);
  if (!(d1.after(d2) == d2.after(d1))) return CheckResult::fail_note(name, "D1 D2 != D2 D1");
  for (const OperatorMatrix* d : {&d1, &d2}) {
    if (!(sigma.after(*d).scaled(minus_one) == d->after(sigma)))
      return CheckResult::fail_note(name, "-sigma " + d->name() + " != " + d->name() + " sigma");
    if (!d->after(*d).is_zero())
      return CheckResult::fail_note(name, d->name() + "^2 != 0");
  }
  if (!sigma.invertible()) return CheckResult::fail_note(name, "sigma is not invertible");
  if (sigma(A.unit()) != A.unit() || !is_zero_vec(d1(A.unit())) || !is_zero_vec(d2(A.unit())))
    return CheckResult::fail_note(name, "operators do not fix the unit");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const Vec a = A.basis(i), b = A.basis(j), ab = A.mul(a, b);
      const std::string input = "(a,b) = (" + A.labels()[i] + ", " + A.labels()[j] + ")";
      auto add = [&](Vec x, const Vec& y) {
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
        return x;
      };
      const std::pair<Vec, Vec> laws[] = {
          {sigma(ab), A.mul(sigma(a), sigma(b))},
          {d1(ab), add(A.mul(d1(a), sigma(b)), A.mul(a, d1(b)))},
          {d2(ab), add(A.mul(d2(a), b), A.mul(sigma(a), d2(b)))},
      };
      const char* which[] = {"sigma", "D1", "D2"};
      for (int k = 0; k < 3; ++k)
        if (laws[k].first != laws[k].second)
          return CheckResult::fail(name, {std::string(which[k]) + " on " + input, A.str(laws[k].first), A.str(laws[k].second)});
    }
  return CheckResult::pass(name);
}

/// The deformation a*b = ab + t D1(a) D2(b) kept with t symbolic.
class FinDimDeformation {
public:
  FinDimDeformation(FinDimAlgebra A, const OperatorMatrix& d1, const OperatorMatrix& d2) : base_(std::move(A)) {
    const std::size_t n = base_.dim();
    mu1_.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mu1_[i][j] = base_.mul(d1(base_.basis(i)), d2(base_.basis(j)));
  }

  const FinDimAlgebra& base() const { return base_; }
  const Vec& mu1(std::size_t i, std::size_t j) const { return mu1_[i][j]; }

  /// e.g. "t * s1" for gamma0 * gamma1.
  std::string product_str(std::size_t i, std::size_t j) const {
    const Vec& m0 = base_.structure(i, j);
    const Vec& m1 = mu1_[i][j];
    std::string out = is_zero_vec(m0) ? "" : base_.str(m0);
    if (!is_zero_vec(m1)) {
      const std::string tail = base_.str(m1);
      const auto nonzero = std::count_if(m1.begin(), m1.end(), [](const Scalar& x) { return !x.is_zero(); });
      const bool single = nonzero == 1;
      out += (out.empty() ? "" : " + ") + std::string("t * ") + (single ? tail : "(" + tail + ")");
    }
    return out.empty() ? "0" : out;
  }

  /// Structure constants at t = t0, re-validated.
  FinDimAlgebra specialize(const Scalar& t0) const {
    const std::size_t n = base_.dim();
    FinDimAlgebra::Table c(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        c[i][j] = base_.structure(i, j);
        for (std::size_t k = 0; k < n; ++k) c[i][j][k] += t0 * mu1_[i][j][k];
      }
    return FinDimAlgebra::create(base_.field(), base_.labels(), std::move(c), base_.unit());
  }

private:
  FinDimAlgebra base_;
  std::vector<std::vector<Vec>> mu1_;
};

/// Deformed algebra at t0; throws if the operators fail the module-algebra
/// check or the result is not associative.
inline FinDimAlgebra findim_star(const FinDimAlgebra& A, const OperatorMatrix& sigma, const OperatorMatrix& d1,
                                 const OperatorMatrix& d2, const Scalar& t0) {
  const CheckResult r = check_hminus1_module_algebra(A, sigma, d1, d2);
  if (!r) throw FinDimError("operators are not an H_{-1} module-algebra structure: " + r.note);
  return FinDimDeformation(A, d1, d2).specialize(t0);
}

/// dim {x : tr(L_x L_y) = 0 for all y}.
inline std::size_t radical_dimension(const FinDimAlgebra& A) {
  const std::size_t n = A.dim();
  std::vector<Mat> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(A.left_mul(A.basis(i)));
  Mat gram(n, zero_vec(A.field(), n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) gram[i][j] += L[i][r][k] * L[j][k][r];
  return n - rank(gram, n);
}

/// dim {x : xy = yx for all basis y}.
inline std::size_t center_dimension(const FinDimAlgebra& A) {
  const std::size_t n = A.dim();
  Mat eqs;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t k = 0; k < n; ++k) {
      Vec row = zero_vec(A.field(), n);
      for (std::size_t x = 0; x < n; ++x) row[x] = A.structure(x, y)[k] - A.structure(y, x)[k];
      eqs.push_back(std::move(row));
    }
  return n - rank(eqs, n);
}

/// M_2 with basis e11, e12, e21, e22.
inline FinDimAlgebra matrix_algebra_2x2(ScalarField F = ScalarField::cyclotomic(1)) {
  FinDimAlgebra::Table c(4, std::vector<Vec>(4, zero_vec(F, 4)));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int d = 0; d < 2; ++d) c[2 * a + b][2 * b + d][2 * a + d] = Scalar(F, 1);
  Vec unit = zero_vec(F, 4);
  unit[0] = unit[3] = Scalar(F, 1);
  return FinDimAlgebra::create(F, {"e11", "e12", "e21", "e22"}, std::move(c), std::move(unit));
}

/// x = gamma0 - gamma1 and g = s0 - s1 satisfy gx = -xg, x^2 = 0, g^2 = 1,
/// and 1, x, g, xg span the algebra.
inline CheckResult check_taft_presentation(const FinDimAlgebra& A) {
  const std::string name = "x = gamma0 - gamma1, g = s0 - s1 presentation";
  if (A.dim() != 4) return CheckResult::fail_note(name, "needs the four dimensional algebra");
  auto diff = [&](std::size_t i, std::size_t j) {
    Vec v = A.basis(i);
    v[j] = Scalar(A.field(), -1);
    return v;
  };
  const Vec x = diff(2, 3), g = diff(0, 1);
  const Vec gx = A.mul(g, x), xg = A.mul(x, g);
  Vec neg_xg = xg;
  for (auto& c : neg_xg) c = -c;
  if (gx != neg_xg) return CheckResult::fail(name, {"gx vs -xg", A.str(gx), A.str(neg_xg)});
  if (!is_zero_vec(A.mul(x, x))) return CheckResult::fail(name, {"x^2", A.str(A.mul(x, x)), "0"});
  if (A.mul(g, g) != A.unit()) return CheckResult::fail(name, {"g^2", A.str(A.mul(g, g)), A.str(A.unit())});
  if (rank({A.unit(), x, g, xg}, 4) != 4) return CheckResult::fail_note(name, "1, x, g, xg are dependent");
  return CheckResult::pass(name);
}

}  // namespace qdeform

#endif  // QDEFORM_FINDIM_HPP
