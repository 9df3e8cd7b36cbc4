#include "qdeform/deform.hpp"

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

CPElement random_element(const AlgebraPtr& alg, std::mt19937& rng, int d) {
  const auto keys = basis_keys(*alg, d);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  CPElement out(alg);
  for (int k = 0; k < 3; ++k) {
    const auto& key = keys[pick(rng)];
    out.add_term(key, Scalar(alg->field(), coef(rng)));
  }
  return out;
}

}  // namespace

TEST(Deform, WeylCommutator) {
  const auto f = weyl_factor();
  const auto sp = StarProduct::create({f});
  const auto& alg = f.algebra();
  const TPoly comm = sp(poly(alg, "x1"), poly(alg, "x2")) - sp(poly(alg, "x2"), poly(alg, "x1"));
  EXPECT_EQ(comm.degree(), 1);
  EXPECT_TRUE(comm.coeff(0).is_zero());
  EXPECT_EQ(comm.coeff(1), CPElement::one(alg));
  EXPECT_EQ(comm.str(), "t^1 * (1)");
}

TEST(Deform, WeylHigherTerms) {
  // x1^2 * x2^2 = x1^2 x2^2 + 4 t x1 x2 + 2 t^2 (classical Moyal-type expansion)
  const auto f = weyl_factor();
  const auto sp = StarProduct::create({f});
  const auto& alg = f.algebra();
  const TPoly p = sp(poly(alg, "x1^2"), poly(alg, "x2^2"));
  EXPECT_EQ(p.coeff(0), poly(alg, "x1^2 x2^2"));
  EXPECT_EQ(p.coeff(1), poly(alg, "4 * x1 x2"));
  EXPECT_EQ(p.coeff(2), poly(alg, "2"));
  EXPECT_EQ(p.degree(), 2);
}

TEST(Deform, CyclicChainSingleFactor) {
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto sp = StarProduct::create({f});
  const TPoly x12 = sp(poly(ex.alg, "x1"), poly(ex.alg, "x2"));
  EXPECT_EQ(x12.coeff(0), poly(ex.alg, "x1 x2"));
  EXPECT_EQ(x12.coeff(1), CPElement::group_unit(ex.alg, f.g()));
  EXPECT_EQ(x12.str(), "x1 x2 + t^1 * (g(1,0))");
  EXPECT_EQ(sp(poly(ex.alg, "x2"), poly(ex.alg, "x1")), TPoly::constant(poly(ex.alg, "x1 x2")));
}

TEST(Deform, UnitIsPreserved) {
  std::mt19937 rng(7);
  const auto ex = setup(3, 3);
  const auto sp = StarProduct::create({factor_from_seed(ex.alg, ex.fx.seeds[0])});
  const CPElement one = CPElement::one(ex.alg);
  for (int k = 0; k < 20; ++k) {
    const CPElement a = random_element(ex.alg, rng, 3);
    EXPECT_EQ(sp(a, one), TPoly::constant(a));
    EXPECT_EQ(sp(one, a), TPoly::constant(a));
  }
}

TEST(Deform, CoefficientsMatchOperatorPowers) {
  std::mt19937 rng(11);
  for (int l : {2, 3}) {
    const auto ex = setup(3, l);
    const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
    const auto sp = StarProduct::create({f});
    const auto ops = make_operators(f);
    for (int k = 0; k < 15; ++k) {
      const CPElement a = random_element(ex.alg, rng, 4);
      const CPElement b = random_element(ex.alg, rng, 4);
      const TPoly p = sp(a, b);
      EXPECT_EQ(p.coeff(0), cp_mul(a, b));
      EXPECT_LE(p.degree(), l - 1);
      for (int i = 0; i < l; ++i)
        EXPECT_EQ(p.coeff(i), ops.d1.power(i)(a) * ops.d2.power(i)(b) * exp_coefficient(f.ctx(), i));
    }
  }
}

TEST(Deform, GradingLowersByTwoPerPower) {
  const auto ex = setup(3, 3);
  const auto sp = StarProduct::create({factor_from_seed(ex.alg, ex.fx.seeds[0])});
  for (const auto& [a, b] : basis_pairs(*ex.alg, 4)) {
    const TPoly p = sp(CPElement::basis(ex.alg, a.mono, a.group), CPElement::basis(ex.alg, b.mono, b.group));
    for (int i = 0; i <= p.degree(); ++i)
      for (const auto& [key, c] : p.coeff(i).terms())
        EXPECT_EQ(key.mono.degree(), a.mono.degree() + b.mono.degree() - 2 * i);
  }
}

TEST(Deform, Specialization) {
  const auto ex = setup(3, 2);
  const auto sp = StarProduct::create({factor_from_seed(ex.alg, ex.fx.seeds[0])});
  const TPoly p = sp(poly(ex.alg, "x1"), poly(ex.alg, "x2"));
  const Scalar two(ex.alg->field(), 2);
  EXPECT_EQ(p.specialize(two), poly(ex.alg, "x1 x2 + 2 * g(1,0)"));
  EXPECT_EQ(p.specialize(Scalar(ex.alg->field())), p.coeff(0));
}

TEST(Deform, AssociativitySingleFactor) {
  const auto ex = setup(3, 2);
  const auto sp = StarProduct::create({factor_from_seed(ex.alg, ex.fx.seeds[0])});
  EXPECT_TRUE(check_associativity(sp, 3));
}

TEST(Deform, AssociativityWeyl) {
  EXPECT_TRUE(check_associativity(StarProduct::create({weyl_factor()}), 4));
}

TEST(Deform, AssociativityAllFactors) {
  const auto ex = setup(3, 2);
  std::vector<DeformFactor> fs;
  for (const auto& seed : ex.fx.seeds) fs.push_back(factor_from_seed(ex.alg, seed));
  EXPECT_TRUE(check_associativity(StarProduct::create(fs), 3));
}

TEST(Deform, AssociativityGAndInverse) {
  const auto ex = setup(3, 3);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto sp = StarProduct::create({f, inverse_factor(f)});
  EXPECT_TRUE(check_associativity(sp, 3));
}

TEST(Deform, AssociativityFailureHasWitness) {
  // s = x3 is not semi-invariant for g1 at l = 2, so the factor is built unchecked.
  const auto ex = setup(3, 2);
  const auto& seed = ex.fx.seeds[0];
  const int g = ex.alg->group().index(seed.g);
  const auto bad = DeformFactor::unchecked(ex.alg, g, seed.i, seed.j, factor_from_seed(ex.alg, seed).q(), poly(ex.alg, "x3"));
  ASSERT_TRUE(bad.violation().has_value());
  EXPECT_THROW(StarProduct::create({bad}), StarError);
}

TEST(Deform, NoncommutingFactorsRejected) {
  const auto ex = setup(3, 3);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto h = factor_from_seed(ex.alg, ex.fx.seeds[1]);
  EXPECT_THROW(StarProduct::create({f, f}), StarError);
  EXPECT_NO_THROW(StarProduct::create({f, h}));
  EXPECT_FALSE(check_commuting_factors({f, inverse_factor(f)}, 3));
  EXPECT_NO_THROW(StarProduct::create({f, inverse_factor(f)}));
}

TEST(Deform, HochschildOperatorCocycle) {
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  EXPECT_TRUE(check_hochschild_cocycle(operator_cocycle(f), 3));
  const auto zero = BilinearMap(ex.alg, [&](const CPElement&, const CPElement&) { return CPElement(ex.alg); });
  EXPECT_TRUE(check_hochschild_cocycle(zero, 3));
}

TEST(Deform, HochschildCoboundaryOfNonDerivation) {
  // delta(D)(a,b) = D(ab) - D(a)b - aD(b) is a coboundary, so it passes even for non-derivations.
  const auto ex = setup(3, 3);
  const auto ops = make_operators(factor_from_seed(ex.alg, ex.fx.seeds[0]));
  const auto d = ops.d1.after(ops.d1);
  ASSERT_NE(d(poly(ex.alg, "x1^2")), CPElement(ex.alg));
  const auto delta = BilinearMap(ex.alg, [&](const CPElement& a, const CPElement& b) {
    return d(a * b) - d(a) * b - a * d(b);
  });
  EXPECT_TRUE(check_hochschild_cocycle(delta, 3));
}

TEST(Deform, HochschildNonCocycleWitness) {
  const auto ex = setup(3, 2);
  const auto ops = make_operators(factor_from_seed(ex.alg, ex.fx.seeds[0]));
  const auto mu = BilinearMap(ex.alg, [&](const CPElement& a, const CPElement& b) { return ops.d1(a) * ops.d1(b); });
  const CheckResult r = check_hochschild_cocycle(mu, 3);
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

TEST(Deform, HeckeRelationsSingleFactor) {
  const auto ex = setup(3, 2);
  const auto f = factor_from_seed(ex.alg, ex.fx.seeds[0]);
  const auto sp = StarProduct::create({f});
  const auto rels = hecke_relations(sp);
  ASSERT_EQ(rels.size(), 3u);
  EXPECT_EQ(rels[0].v, 0);
  EXPECT_EQ(rels[0].w, 1);
  ASSERT_EQ(rels[0].components.size(), 1u);
  EXPECT_EQ(rels[0].components.begin()->first, f.g());
  EXPECT_EQ(rels[0].components.begin()->second, CPElement::one(ex.alg));
  EXPECT_TRUE(rels[0].hecke);
  EXPECT_EQ(rels[0].str(*ex.alg), "x1 x2 - x2 x1 = t * (1) * g(1,0)");
  const auto ex4 = setup(4, 2);
  const auto sp4 = StarProduct::create({factor_from_seed(ex4.alg, ex4.fx.seeds[0])});
  EXPECT_TRUE(hecke_relation(sp4, 2, 3).components.empty());
}

TEST(Deform, HeckeAntisymmetry) {
  for (int n : {3, 4}) {
    const auto ex = setup(n, 2);
    std::vector<DeformFactor> fs;
    for (const auto& seed : ex.fx.seeds) fs.push_back(factor_from_seed(ex.alg, seed));
    const auto sp = StarProduct::create(fs);
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) {
        const auto a = hecke_relation(sp, v, w);
        const auto b = hecke_relation(sp, w, v);
        ASSERT_EQ(a.components.size(), b.components.size());
        for (const auto& [g, p] : a.components) EXPECT_EQ(p, b.components.at(g) * Scalar(ex.alg->field(), -1));
      }
  }
}

TEST(Deform, NonHeckeLabel) {
  const auto ex = setup(3, 3, true);
  const auto& seed = ex.fx.seeds[0];
  const int g = ex.alg->group().index(seed.g);
  const auto sols = solve_semi_invariants(ex.alg->group(), ex.alg->alpha(), g, seed.i, seed.j, 6);
  ASSERT_FALSE(sols.empty());
  const auto f = DeformFactor::create(ex.alg, g, seed.i, seed.j, CPElement::basis(ex.alg, sols.front(), 0));
  const auto rels = hecke_relations(StarProduct::create({f}));
  EXPECT_FALSE(rels[0].hecke);
  EXPECT_NE(rels[0].str(*ex.alg).find("non-Hecke"), std::string::npos);
}
