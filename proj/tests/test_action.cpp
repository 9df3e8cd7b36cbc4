#include "qdeform/action.hpp"

#include <gtest/gtest.h>

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

// First semi-invariant of the seed, preferring s = 1.
DeformFactor seed_factor(const ChainSetup& ex, int k) {
  const auto& seed = ex.fx.seeds[k];
  const int g = ex.alg->group().index(seed.g);
  const auto sols = solve_semi_invariants(ex.alg->group(), ex.alg->alpha(), g, seed.i, seed.j, 2 * ex.fx.group.root_order());
  if (sols.empty()) throw std::runtime_error("no semi-invariant");
  return DeformFactor::create(ex.alg, g, seed.i, seed.j, CPElement::basis(ex.alg, sols.front(), 0));
}

}  // namespace

TEST(Action, OperatorValues) {
  const auto ex = setup(3, 3);
  const auto& G = ex.alg->group();
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto ops = make_operators(f);
  const Scalar q = f.q();
  const Scalar one(G.field(), 1);
  for (int h = 0; h < G.size(); ++h) {
    const Scalar xinv = G.character_value(G.inv(h), 0);
    const CPElement x1sq = CPElement::basis(ex.alg, Monomial({2, 0, 0}), h);
    EXPECT_EQ(ops.d1(x1sq), CPElement::basis(ex.alg, Monomial({1, 0, 0}), h) * (xinv * (one + q)));
    const CPElement x1 = CPElement::basis(ex.alg, Monomial({1, 0, 0}), h);
    EXPECT_EQ(ops.sigma(x1), x1 * (xinv * q));
    EXPECT_EQ(ops.sigma_inv(ops.sigma(x1)), x1);
  }
}

TEST(Action, D2OnX2IsGroupUnit) {
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto ops = make_operators(f);
  EXPECT_EQ(ops.d2(poly(ex.alg, "x2")), CPElement::group_unit(ex.alg, f.g()));
  EXPECT_EQ(ops.d2(poly(ex.alg, "x2")).str(), "g(1,0)");
}

TEST(Action, FactorValidation) {
  const auto ex = setup(3, 2);
  const int g1 = ex.alg->group().index(GroupElement{{1, 0}});
  EXPECT_THROW(DeformFactor::create(ex.alg, g1, 0, 1, poly(ex.alg, "x3")), FactorError);
  try {
    DeformFactor::create(ex.alg, g1, 0, 1, poly(ex.alg, "x3"));
  } catch (const FactorError& e) {
    EXPECT_NE(std::string(e.what()).find("semi-invariant"), std::string::npos);
  }
  EXPECT_THROW(DeformFactor::create(ex.alg, g1, 0, 2, CPElement::one(ex.alg)), FactorError);
  EXPECT_THROW(DeformFactor::create(ex.alg, g1, 0, 1, poly(ex.alg, "x1")), FactorError);
  EXPECT_THROW(DeformFactor::create(ex.alg, g1, 0, 1, CPElement::group_unit(ex.alg, g1)), FactorError);
  EXPECT_NO_THROW(DeformFactor::create(ex.alg, g1, 0, 1, poly(ex.alg, "x3^2")));
}

TEST(Action, SemiInvariants) {
  const auto ex = setup(3, 2);
  const auto& G = ex.alg->group();
  const int g1 = G.index(GroupElement{{1, 0}});
  const auto d2 = solve_semi_invariants(G, ex.alg->alpha(), g1, 0, 1, 2);
  ASSERT_EQ(d2.size(), 2u);
  EXPECT_EQ(d2[0].str(), "1");
  EXPECT_EQ(d2[1].str(), "x3^2");
  const auto d1 = solve_semi_invariants(G, ex.alg->alpha(), g1, 0, 1, 1);
  ASSERT_EQ(d1.size(), 1u);
  EXPECT_EQ(d1[0].str(), "1");

  GroupSpec T({1}, 3, {{0, 0, 0}}, ScalarField::cyclotomic(1));
  const auto all = solve_semi_invariants(T, TwoCocycle::trivial(T), 0, 0, 1, 3);
  EXPECT_EQ(all.size(), 4u);
}

TEST(Action, TrivialCocycleNeedsNonconstantS) {
  const auto ex = setup(3, 3, true);
  const auto& G = ex.alg->group();
  const auto sols = solve_semi_invariants(G, ex.alg->alpha(), G.index(ex.fx.seeds[0].g), 0, 1, 6);
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0].str(), "x3^2");
  EXPECT_EQ(sols[1].str(), "x3^5");
}

TEST(Action, SkewDerivationsCyclicChain) {
  const auto ex = setup(3, 2);
  for (int k = 0; k < 3; ++k) {
    const CheckResult r = check_skew_derivations(factor_from_seed(ex.alg, ex.fx.seeds[k]), 3);
    EXPECT_TRUE(r) << r;
  }
}

TEST(Action, SkewDerivationFailsForBadS) {
  const auto ex = setup(3, 2);
  const int g1 = ex.alg->group().index(GroupElement{{1, 0}});
  const auto bad = DeformFactor::unchecked(ex.alg, g1, 0, 1, Scalar(ex.alg->field(), -1), poly(ex.alg, "x3"));
  const CheckResult r = check_skew_derivations(bad, 3);
  EXPECT_FALSE(r);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(Action, DerivationsKillOne) {
  const auto ex = setup(4, 3);
  const auto ops = make_operators(factor_from_seed(ex.alg, ex.fx.seeds[1]));
  EXPECT_TRUE(ops.d1(CPElement::one(ex.alg)).is_zero());
  EXPECT_TRUE(ops.d2(CPElement::one(ex.alg)).is_zero());
}

TEST(Action, ModuleAlgebraCyclicChain) {
  const auto ex = setup(3, 2);
  for (int k = 0; k < 3; ++k) {
    const CheckResult r = check_module_algebra(factor_from_seed(ex.alg, ex.fx.seeds[k]), 4);
    EXPECT_TRUE(r) << r;
  }
}

TEST(Action, ModuleAlgebraOtherFixtures) {
  for (auto [n, l, triv] : {std::tuple{3, 3, false}, {3, 3, true}, {4, 2, true}, {3, 4, false}}) {
    const auto ex = setup(n, l, triv);
    const DeformFactor f = seed_factor(ex, n - 1);
    const CheckResult r = check_module_algebra(f, 3);
    EXPECT_TRUE(r) << r;
  }
}

TEST(Action, WeylDerivationsCommute) {
  const auto f = weyl_factor();
  EXPECT_FALSE(f.ctx().truncated());
  const CheckResult r = check_module_algebra(f, 4);
  EXPECT_TRUE(r) << r;
}

TEST(Action, MixedRelations) {
  for (int l : {3, 4}) {
    const auto ex = setup(3, l);
    const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
    const CheckResult r = check_mixed_relations(f, inverse_factor(f), 3);
    EXPECT_TRUE(r) << r;
  }
  const auto ex3 = setup(3, 3);
  const auto f3 = factor_from_seed(ex3.alg, ex3.fx.seeds[0]);
  EXPECT_EQ(inverse_factor(f3).s().str(), "x3");
  EXPECT_THROW(inverse_factor(f3, CPElement::one(ex3.alg)), FactorError);
  const auto w = weyl_factor();
  EXPECT_TRUE(check_mixed_relations(w, inverse_factor(w), 3));
}

TEST(Action, CommutingFactorsCyclicChain) {
  const auto ex = setup(3, 2);
  std::vector<DeformFactor> fs;
  for (const auto& seed : ex.fx.seeds) fs.push_back(factor_from_seed(ex.alg, seed));
  const CheckResult r = check_commuting_factors(fs, 4);
  EXPECT_TRUE(r) << r;
  EXPECT_TRUE(check_commuting_factors({fs[0]}, 4));
}

TEST(Action, GAndInverseDoNotCommute) {
  const auto ex = setup(3, 3);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const CheckResult r = check_commuting_factors({f, inverse_factor(f)}, 2);
  EXPECT_FALSE(r);
  EXPECT_TRUE(r.witness.has_value());
}
