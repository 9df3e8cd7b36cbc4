#include "qdeform/cohomology.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qdeform;

namespace {

struct ChainSetup {
  CyclicChainFixture fx;
  AlgebraPtr alg;
};

ChainSetup setup(int n, int l, bool trivial_cocycle = false) {
  auto fx = cyclic_chain_fixture(n, l);
  auto alpha = trivial_cocycle ? TwoCocycle::trivial(fx.group) : fx.alpha;
  auto alg = make_algebra(fx.group, alpha);
  return {std::move(fx), std::move(alg)};
}

CPElement poly(const AlgebraPtr& alg, const std::string& text) { return parse_element(text, alg); }

Monomial mono(std::initializer_list<int> e) { return Monomial(e); }

// All semi-invariants of a seed up to degree d, as factors.
std::vector<DeformFactor> seed_factors(const ChainSetup& ex, int d) {
  std::vector<DeformFactor> out;
  for (const auto& seed : ex.fx.seeds) {
    const int g = ex.alg->group().index(seed.g);
    for (const auto& m : solve_semi_invariants(ex.alg->group(), ex.alg->alpha(), g, seed.i, seed.j, d))
      out.push_back(DeformFactor::create(ex.alg, g, seed.i, seed.j, CPElement::basis(ex.alg, m, 0)));
  }
  return out;
}

BarChain random_bar(std::mt19937& rng, int n, int degree) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3);
  BarChain out(n, degree);
  for (int t = 0; t < 4; ++t) {
    BarChain::Key k;
    for (int s = 0; s < degree + 2; ++s) {
      std::vector<int> v(n);
      for (auto& x : v) x = e(rng);
      k.push_back(Monomial::from_vector(v));
    }
    out.add(k, c(rng));
  }
  return out;
}

}  // namespace

TEST(Cohomology, BarDifferentialExamples) {
  const Monomial one(2), x1 = mono({1, 0}), x2 = mono({0, 1});
  BarChain expect1(2, 0);
  expect1.add({x1, one}, 1);
  expect1.add({one, x1}, -1);
  EXPECT_EQ(bar_differential(BarChain::basis({one, x1, one})), expect1);

  BarChain expect2(2, 1);
  expect2.add({x1, x2, one}, 1);
  expect2.add({one, x1 * x2, one}, -1);
  expect2.add({one, x1, x2}, 1);
  EXPECT_EQ(bar_differential(BarChain::basis({one, x1, x2, one})), expect2);
}

TEST(Cohomology, KoszulDifferentialExamples) {
  const Monomial one(2), x1 = mono({1, 0}), x2 = mono({0, 1});
  KoszulChain e1(2, 1);
  e1.add({0}, one, one, 1);
  KoszulChain expect1(2, 0);
  expect1.add({}, x1, one, 1);
  expect1.add({}, one, x1, -1);
  EXPECT_EQ(koszul_differential(e1), expect1);

  KoszulChain e12(2, 2);
  e12.add({0, 1}, one, one, 1);
  KoszulChain expect2(2, 1);
  expect2.add({1}, x1, one, 1);
  expect2.add({1}, one, x1, -1);
  expect2.add({0}, x2, one, -1);
  expect2.add({0}, one, x2, 1);
  EXPECT_EQ(koszul_differential(e12), expect2);

  KoszulChain swapped(2, 2);
  swapped.add({1, 0}, one, one, 1);
  EXPECT_EQ(swapped.terms().begin()->second, Rational(-1));
}

TEST(Cohomology, DifferentialsSquareToZero) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    for (int deg : {2, 3}) EXPECT_TRUE(bar_differential(bar_differential(random_bar(rng, 3, deg))).is_zero());
    KoszulChain k(3, 3);
    std::uniform_int_distribution<int> e(0, 2);
    k.add({0, 1, 2}, mono({e(rng), e(rng), 0}), mono({0, e(rng), e(rng)}), 2);
    EXPECT_TRUE(koszul_differential(koszul_differential(k)).is_zero());
    KoszulChain k2(3, 2);
    k2.add({0, 2}, mono({e(rng), 1, 0}), mono({1, e(rng), e(rng)}), -1);
    k2.add({1, 2}, mono({0, e(rng), 0}), mono({e(rng), 0, 0}), 5);
    EXPECT_TRUE(koszul_differential(koszul_differential(k2)).is_zero());
  }
}

TEST(Cohomology, PsiExamples) {
  const Monomial one(2), x1 = mono({1, 0}), x2 = mono({0, 1});
  KoszulChain e1(2, 1);
  e1.add({0}, one, one, 1);
  EXPECT_EQ(psi1(BarChain::basis({one, x1, one})), e1);

  KoszulChain e12(2, 2);
  e12.add({0, 1}, one, one, 1);
  EXPECT_EQ(psi2(BarChain::basis({one, x1, x2, one})), e12);
  EXPECT_TRUE(psi2(BarChain::basis({one, x2, x1, one})).is_zero());
  EXPECT_TRUE(psi2(BarChain::basis({one, one, x2, one})).is_zero());
}

TEST(Cohomology, PsiBimoduleLinear) {
  const Monomial one(3), x1 = mono({1, 0, 0}), x2 = mono({0, 1, 0}), x3 = mono({0, 0, 1});
  const KoszulChain inner = psi2(BarChain::basis({one, x1 * x1, x2, one}));
  const KoszulChain outer = psi2(BarChain::basis({x3, x1 * x1, x2, x1}));
  KoszulChain expect(3, 2);
  for (const auto& [k, c] : inner.terms()) expect.add(k.wedge, x3 * k.left, k.right * x1, c);
  EXPECT_EQ(outer, expect);
}

TEST(Cohomology, ChainMap) {
  EXPECT_TRUE(check_chain_map(2, 3));
  EXPECT_TRUE(check_chain_map(3, 3));
  EXPECT_TRUE(check_chain_map(3, 2, {2, 0, 1}));
  EXPECT_TRUE(check_chain_map(4, 2, {3, 1, 0, 2}));
  const Monomial one(3);
  EXPECT_TRUE(bar_differential(BarChain::basis({one, one, one})).is_zero());
  EXPECT_TRUE(psi1(BarChain::basis({one, one, one})).is_zero());
}

TEST(Cohomology, ClassToCocycleValues) {
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto cls = CohomologyClass::for_factor(f);
  EXPECT_EQ(cls.str(), "(e1^e2)* (x) (1) g(1,0)");
  const auto mu = class_to_cocycle(cls);
  EXPECT_EQ(mu(poly(ex.alg, "x1"), poly(ex.alg, "x2")), CPElement::group_unit(ex.alg, f.g()));
  EXPECT_TRUE(mu(poly(ex.alg, "x2"), poly(ex.alg, "x1")).is_zero());
  for (const auto& k : basis_keys(*ex.alg, 3))
    EXPECT_TRUE(mu(CPElement::one(ex.alg), CPElement::basis(ex.alg, k.mono, k.group)).is_zero());
}

TEST(Cohomology, ClassMatchesOperatorCocycle) {
  for (int n : {3, 4})
    for (int l : {2, 3}) {
      const auto ex = setup(n, l);
      for (const auto& seed : ex.fx.seeds) {
        const auto f = factor_from_seed(ex.alg, seed);
        SCOPED_TRACE(f.str());
        const auto cls = CohomologyClass::for_factor(f);
        EXPECT_TRUE(check_invariance(cls));
        EXPECT_TRUE(check_class_equals_operator_cocycle(cls, f, n == 3 ? 3 : 2));
      }
    }
}

TEST(Cohomology, NonconstantSemiInvariants) {
  for (bool trivial : {false, true}) {
    const auto ex = setup(3, 2, trivial);
    for (const auto& f : seed_factors(ex, 3)) {
      SCOPED_TRACE(f.str());
      const auto cls = CohomologyClass::for_factor(f);
      EXPECT_TRUE(check_invariance(cls));
      EXPECT_TRUE(check_class_equals_operator_cocycle(cls, f, 3));
    }
  }
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0], poly(ex.alg, "x3^2"));
  EXPECT_TRUE(check_class_equals_operator_cocycle(CohomologyClass::for_factor(f), f, 3));
}

TEST(Cohomology, MismatchedSFails) {
  const auto ex = setup(3, 2);
  const auto f1 = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto fx = factor_from_seed(ex.alg, ex.fx.seeds[0], poly(ex.alg, "x3^2"));
  const CheckResult r = check_class_equals_operator_cocycle(CohomologyClass::for_factor(fx), f1, 3);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness.has_value());
}

TEST(Cohomology, ClassCocycleIsHochschild) {
  const auto ex = setup(3, 3);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[1]);
  EXPECT_TRUE(check_hochschild_cocycle(class_to_cocycle(CohomologyClass::for_factor(f)), 3));
}

TEST(Cohomology, InvarianceFailsForBadS) {
  const auto ex = setup(3, 3);
  const auto& seed = ex.fx.seeds[0];
  const int g = ex.alg->group().index(seed.g);
  const auto bad = CohomologyClass::unchecked(ex.alg, g, seed.i, seed.j, poly(ex.alg, "x3"));
  ASSERT_TRUE(bad.violation().has_value());
  const CheckResult r = check_invariance(bad);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->input.find("step 1"), std::string::npos);
  EXPECT_THROW(class_to_cocycle(bad), ClassError);
}

TEST(Cohomology, InvarianceTrivialGroup) {
  const auto f = weyl_factor();
  const auto cls = CohomologyClass::unchecked(f.algebra(), 0, 0, 1, CPElement::one(f.algebra()));
  EXPECT_TRUE(check_invariance(cls));
}

TEST(Cohomology, HH2Components) {
  const auto ex = setup(3, 2);
  const int g1 = ex.alg->group().index(ex.fx.seeds[0].g);
  const auto c = hh2_component(ex.alg, g1, 0);
  EXPECT_EQ(c.dimension, 1u);
  ASSERT_EQ(c.basis.size(), 1u);
  EXPECT_EQ(c.basis[0], "(e1^e2)* (x) (1) g(1,0)");
  EXPECT_FALSE(c.reason.has_value());

  // Z/2 flipping x1 only: codim 1.
  const GroupSpec flip({2}, 2, {{1, 0}}, ScalarField::cyclotomic(2));
  const auto flip_alg = make_algebra(flip, TwoCocycle::trivial(flip));
  const auto cf = hh2_component(flip_alg, 1, 2);
  EXPECT_EQ(cf.dimension, 0u);
  EXPECT_EQ(cf.reason, std::optional<std::string>("codimension"));

  // Z/4 scaling both coordinates by i: codim 2, det = -1.
  const GroupSpec rot({4}, 2, {{1, 1}}, ScalarField::cyclotomic(4));
  const auto rot_alg = make_algebra(rot, TwoCocycle::trivial(rot));
  const auto cr = hh2_component(rot_alg, 1, 2);
  EXPECT_EQ(cr.dimension, 0u);
  EXPECT_EQ(cr.reason, std::optional<std::string>("determinant"));
}

TEST(Cohomology, HH2IdentityComponent) {
  // Trivial group on two coordinates: (e1^e2)* (x) S(V)_{<=d} is all invariant.
  const auto f = weyl_factor();
  const auto c = hh2_component(f.algebra(), 0, 2);
  EXPECT_EQ(c.dimension, 6u);
}

TEST(Cohomology, FactorsGiveClasses) {
  // Every admitted factor yields an admissible, invariant class.
  for (int n : {3, 4}) {
    const auto ex = setup(n, 3);
    for (const auto& f : seed_factors(ex, 4)) {
      SCOPED_TRACE(f.str());
      const auto cls = CohomologyClass::for_factor(f);
      EXPECT_FALSE(cls.violation().has_value());
      EXPECT_TRUE(check_invariance(cls));
    }
  }
}

TEST(Cohomology, SquareZeroSweeps) {
  for (int n : {2, 3}) {
    EXPECT_TRUE(check_bar_square_zero(n, 3));
    EXPECT_TRUE(check_koszul_square_zero(n, 3));
  }
}
