#include "qdeform/qcalc.hpp"

#include <gtest/gtest.h>

using namespace qdeform;

namespace {

std::vector<QContext> contexts() {
  return {QContext(Scalar(ScalarField::cyclotomic(1), 1)), QContext::root_of_unity(2), QContext::root_of_unity(3),
          QContext::root_of_unity(4), QContext::generic()};
}

}  // namespace

TEST(QCalc, ContextOrder) {
  EXPECT_EQ(QContext::root_of_unity(4).ell(), 4);
  EXPECT_TRUE(QContext::root_of_unity(4).truncated());
  EXPECT_EQ(QContext::generic().ell(), std::nullopt);
  EXPECT_FALSE(QContext(Scalar(ScalarField::cyclotomic(1), 1)).truncated());
}

TEST(QCalc, QIntegers) {
  const auto c4 = QContext::root_of_unity(4);
  EXPECT_TRUE(q_integer(c4, 0).is_zero());
  EXPECT_TRUE(q_integer(c4, 4).is_zero());
  EXPECT_TRUE(q_integer(c4, 8).is_zero());
  const auto g = QContext::generic();
  const Scalar q = g.q();
  EXPECT_EQ(q_integer(g, 3), g.one() + q + q * q);
}

TEST(QCalc, QBinomials) {
  EXPECT_TRUE(q_binomial(QContext::root_of_unity(4), 4, 2).is_zero());
  EXPECT_EQ(q_binomial(QContext(Scalar(ScalarField::cyclotomic(1), 1)), 4, 2), Scalar(ScalarField::cyclotomic(1), 6));
  const auto g = QContext::generic();
  EXPECT_EQ(q_binomial(g, 2, 1), g.one() + g.q());
  EXPECT_THROW(q_binomial(g, 2, 3), std::out_of_range);
  EXPECT_THROW(q_binomial(g, 2, -1), std::out_of_range);
}

TEST(QCalc, BinomialsVanishAtRootsOfUnity) {
  for (int l = 2; l <= 6; ++l) {
    const auto c = QContext::root_of_unity(l);
    for (int i = 1; i < l; ++i) EXPECT_TRUE(q_binomial(c, l, i).is_zero()) << l << "," << i;
    EXPECT_TRUE(q_binomial(c, l, 0).is_one());
    EXPECT_TRUE(q_binomial(c, l, l).is_one());
  }
}

TEST(QCalc, RecurrenceAgreesWithQuotientGenerically) {
  const auto g = QContext::generic();
  for (int k = 0; k <= 7; ++k)
    for (int i = 0; i <= k; ++i)
      EXPECT_EQ(q_binomial(g, k, i), q_factorial(g, k) / (q_factorial(g, i) * q_factorial(g, k - i)));
}

TEST(QCalc, InverseQIntegersArePeriodic) {
  for (int l = 2; l <= 5; ++l) {
    const auto inv = QContext::root_of_unity(l).inverse();
    for (int i = 0; i < 3 * l; ++i) EXPECT_EQ(q_integer(inv, i + l), q_integer(inv, i));
  }
}

TEST(QCalc, BinomialFormula) {
  EXPECT_TRUE(q_binomial_formula_check(QContext::root_of_unity(3), 3));
  EXPECT_TRUE(q_binomial_formula_check(QContext::generic(), 0));
  EXPECT_TRUE(q_binomial_formula_check(QContext::root_of_unity(2), 5));
  for (const auto& c : contexts())
    for (int k = 0; k <= 8; ++k) EXPECT_TRUE(q_binomial_formula_check(c, k)) << c.q() << " k=" << k;
}

TEST(QCalc, ExpCoefficients) {
  const auto c3 = QContext::root_of_unity(3);
  EXPECT_TRUE(exp_coefficient(c3, 0).is_one());
  EXPECT_TRUE(exp_coefficient(c3, 1).is_one());
  EXPECT_EQ(exp_coefficient(c3, 2), (c3.one() + c3.q()).inverse());
  EXPECT_THROW(exp_coefficient(c3, 3), std::out_of_range);
  const auto one = QContext(Scalar(ScalarField::cyclotomic(1), 1));
  EXPECT_EQ(exp_coefficient(one, 4), Scalar(ScalarField::cyclotomic(1), Rational(1, 24)));
}
