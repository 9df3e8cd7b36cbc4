#include "qdeform/findim.hpp"

#include <gtest/gtest.h>

using namespace qdeform;

namespace {

constexpr std::size_t S0 = 0, S1 = 1, G0 = 2, G1 = 3;

Scalar num(const ScalarField& F, long long n, long long d = 1) { return Scalar(F, Rational(n, d)); }

}  // namespace

TEST(FinDim, TaftRelations) {
  const auto T = taft_fixture();
  const auto& A = T.algebra;
  EXPECT_TRUE(is_zero_vec(A.mul(A.basis(G0), A.basis(G1))));
  EXPECT_TRUE(is_zero_vec(A.mul(A.basis(G1), A.basis(G0))));
  Vec sum = A.basis(S0);
  sum[S1] = num(A.field(), 1);
  EXPECT_EQ(sum, A.unit());
  EXPECT_EQ(A.mul(A.basis(S1), A.basis(G0)), A.basis(G0));
  EXPECT_EQ(A.mul(A.basis(G0), A.basis(S0)), A.basis(G0));
  EXPECT_TRUE(is_zero_vec(A.mul(A.basis(S0), A.basis(G0))));
  EXPECT_EQ(A.str(T.sigma(A.basis(G0))), "-gamma1");
  EXPECT_EQ(A.str(T.sigma(A.basis(S0))), "s1");
  EXPECT_EQ(A.str(T.d1(A.basis(G0))), "s1");
  EXPECT_EQ(A.str(T.d2(A.basis(G0))), "s0");
}

TEST(FinDim, ModuleAlgebra) {
  const auto T = taft_fixture();
  EXPECT_TRUE(check_hminus1_module_algebra(T.algebra, T.sigma, T.d1, T.d2));
  const OperatorMatrix id = OperatorMatrix::from_images("1", {T.algebra.basis(0), T.algebra.basis(1), T.algebra.basis(2), T.algebra.basis(3)});
  EXPECT_EQ(T.sigma.after(T.sigma).matrix(), id.matrix());
}

TEST(FinDim, PerturbedD1Fails) {
  const auto T = taft_fixture();
  const auto& A = T.algebra;
  std::vector<Vec> images;
  for (std::size_t k = 0; k < 4; ++k) images.push_back(T.d1(A.basis(k)));
  images[G0] = A.basis(S0);
  const auto bad = OperatorMatrix::from_images("D1", images);
  const CheckResult r = check_hminus1_module_algebra(A, T.sigma, bad, T.d2);
  EXPECT_FALSE(r);
  EXPECT_THROW(findim_star(A, T.sigma, bad, T.d2, num(A.field(), 1)), FinDimError);
}

TEST(FinDim, DeformedProducts) {
  const auto T = taft_fixture();
  const FinDimDeformation def(T.algebra, T.d1, T.d2);
  EXPECT_EQ(def.product_str(G0, G1), "t * s1");
  EXPECT_EQ(def.product_str(G1, G0), "t * s0");
  EXPECT_EQ(def.product_str(S0, S0), "s0");
  EXPECT_EQ(def.product_str(G0, G0), "0");

  const auto& F = T.algebra.field();
  const auto A0 = findim_star(T.algebra, T.sigma, T.d1, T.d2, num(F, 0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(A0.structure(i, j), T.algebra.structure(i, j));

  const auto A1 = findim_star(T.algebra, T.sigma, T.d1, T.d2, num(F, 1));
  EXPECT_EQ(A1.str(A1.mul(A1.basis(G0), A1.basis(G1))), "s1");
  EXPECT_EQ(A1.str(A1.mul(A1.basis(G1), A1.basis(G0))), "s0");
}

TEST(FinDim, AssociativeForSampledT0) {
  const auto T = taft_fixture();
  const auto& F = T.algebra.field();
  for (const auto& t0 : {num(F, 0), num(F, 1), num(F, 2), num(F, -1, 3), num(F, 7, 5)})
    EXPECT_NO_THROW(findim_star(T.algebra, T.sigma, T.d1, T.d2, t0));
}

TEST(FinDim, RadicalDimensions) {
  const auto T = taft_fixture();
  const auto& F = T.algebra.field();
  EXPECT_EQ(radical_dimension(T.algebra), 2u);
  for (const auto& t0 : {num(F, 1), num(F, 2), num(F, -1, 3), num(F, 7, 5)})
    EXPECT_EQ(radical_dimension(findim_star(T.algebra, T.sigma, T.d1, T.d2, t0)), 0u);
  EXPECT_EQ(radical_dimension(matrix_algebra_2x2()), 0u);
}

TEST(FinDim, CenterDimensions) {
  // Oracle (sympy linear solve): the undeformed quiver algebra has center spanned by 1 alone.
  const auto T = taft_fixture();
  const auto& F = T.algebra.field();
  EXPECT_EQ(center_dimension(T.algebra), 1u);
  EXPECT_EQ(center_dimension(findim_star(T.algebra, T.sigma, T.d1, T.d2, num(F, 1))), 1u);
  EXPECT_EQ(center_dimension(matrix_algebra_2x2()), 1u);
  // Q[x]/(x^2) is commutative.
  FinDimAlgebra::Table c(2, std::vector<Vec>(2, zero_vec(F, 2)));
  c[0][0][0] = c[0][1][1] = c[1][0][1] = num(F, 1);
  const auto dual = FinDimAlgebra::create(F, {"1", "x"}, c, {num(F, 1), num(F, 0)});
  EXPECT_EQ(center_dimension(dual), 2u);
  EXPECT_EQ(radical_dimension(dual), 1u);
}

TEST(FinDim, TaftPresentation) {
  EXPECT_TRUE(check_taft_presentation(taft_fixture().algebra));
  EXPECT_FALSE(check_taft_presentation(matrix_algebra_2x2()));
}

TEST(FinDim, RejectsBadStructureConstants) {
  const ScalarField F = ScalarField::cyclotomic(1);
  FinDimAlgebra::Table c(2, std::vector<Vec>(2, zero_vec(F, 2)));
  c[0][0][0] = c[0][1][1] = c[1][0][1] = num(F, 1);
  c[1][0][1] = num(F, 2);  // x * 1 = 2x
  EXPECT_THROW(FinDimAlgebra::create(F, {"1", "x"}, c, {num(F, 1), num(F, 0)}), FinDimError);
}
