#include "qdeform/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace qdeform;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string cfg(const std::string& name) { return std::string(QDEFORM_CONFIG_DIR) + "/" + name; }

const char* kChainHeader = R"(
[scalars]
root_order = 2
[space]
n = 3
[group]
orders = 2, 2
action = 1, -1, 0 / 0, 1, -1
[cocycle]
type = bicharacter
matrix = 0, -1 / 0, 0
)";

std::string first_diagnostic_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.diagnostics().front().key;
  }
  return "";
}

}  // namespace

TEST(Config, ParsesChainFile) {
  const auto c = load_config(cfg("cyclic_chain_n3_l2.cfg"));
  EXPECT_EQ(c.n, 3);
  EXPECT_EQ(c.group->size(), 4);
  ASSERT_EQ(c.factors.size(), 3u);
  EXPECT_EQ(c.factors[2].i(), 2);
  EXPECT_EQ(c.factors[2].j(), 0);
  EXPECT_EQ(c.max_degree, 3);
}

TEST(Config, OrderNotDividingRootOrder) {
  const std::string text = "[scalars]\nroot_order = 4\n[space]\nn = 2\n[group]\norders = 3\naction = 1, -1\n";
  try {
    parse_config(text);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].key, "[group] orders");
    EXPECT_EQ(e.diagnostics()[0].line, 6);
    EXPECT_NE(std::string(e.what()).find("3 does not divide N = 4"), std::string::npos);
  }
}

TEST(Config, CollectsSeveralDiagnostics) {
  try {
    parse_config("[scalars]\nroot_order = 0\n[space]\nn = 3\nbogus = 1\n[weird]\n");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_GE(e.diagnostics().size(), 3u);
  }
}

TEST(Config, RejectsBadSemiInvariant) {
  // x3 is not semi-invariant for g1 on the pair (x1, x2) at q = -1.
  EXPECT_EQ(first_diagnostic_key(std::string(kChainHeader) + "[deformation]\nfactor = g=1,0; pair=1,2; s=x3\n"),
            "[deformation] factor");
  EXPECT_EQ(first_diagnostic_key(std::string(kChainHeader) + "[deformation]\nfactor = g=1,0; pair=1,2; s=1\n"), "");
}

TEST(Config, MalformedFactorLine) {
  EXPECT_EQ(first_diagnostic_key(std::string(kChainHeader) + "[deformation]\nfactor = g=1,0\n"),
            "[deformation] factor");
  EXPECT_EQ(first_diagnostic_key(std::string(kChainHeader) + "[deformation]\nfactor = g=1,0; pair=1,2,3\n"),
            "[deformation] factor");
}

TEST(Config, InvalidTableLoadsWithoutAlgebra) {
  const auto c = load_config(cfg("perturbed_table.cfg"));
  EXPECT_FALSE(c.algebra);
  ASSERT_TRUE(c.cocycle_error.has_value());
}

TEST(Cli, CheckCocyclePassAndFail) {
  EXPECT_EQ(run({"check-cocycle", "--config", cfg("cyclic_chain_n3_l2.cfg")}).code, kExitPass);
  const Outcome bad = run({"check-cocycle", "--config", cfg("perturbed_table.cfg"), "--format", "records"});
  EXPECT_EQ(bad.code, kExitFail);
  EXPECT_NE(bad.out.find(" FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("witness=\""), std::string::npos);
}

TEST(Cli, InvalidTableIsAConfigErrorElsewhere) {
  const Outcome r = run({"check-assoc", "--config", cfg("perturbed_table.cfg")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("config error"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run({"check-assoc"}).code, kExitUsage);
  EXPECT_EQ(run({"check-assoc", "--config", cfg("missing.cfg")}).code, kExitUsage);
  EXPECT_EQ(run({"check-udf", "--ell", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"check-cocycle", "--config", cfg("weyl.cfg"), "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, StarOnWeyl) {
  const Outcome r = run({"star", "--config", cfg("weyl.cfg"), "--a", "x1", "--b", "x2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "(x1) * (x2) = x1 x2 + t^1 * (1)\n");
}

TEST(Cli, StarSingleFactor) {
  const Outcome r = run({"star", "--config", cfg("cyclic_chain_n3_l2_single.cfg"), "--a", "x1", "--b", "x2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "(x1) * (x2) = x1 x2 + t^1 * (g(1,0))\n");
}

TEST(Cli, BadElementIsAParseError) {
  const Outcome r = run({"star", "--config", cfg("weyl.cfg"), "--a", "x9", "--b", "x2"});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, CheckAssocMixedPair) {
  const Outcome r = run({"check-assoc", "--config", cfg("cyclic_chain_n3_l3_mixed.cfg"), "--max-degree", "2"});
  EXPECT_EQ(r.code, kExitPass) << r.out;
  EXPECT_NE(r.out.find("PASS g, g^-1 relations"), std::string::npos);
}

TEST(Cli, RecordsFormat) {
  const Outcome r = run({"--format", "records", "check-assoc", "--config", cfg("weyl.cfg"), "--max-degree", "2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "associativity-of-the-star-product PASS degree<=2\n");
}

TEST(Cli, GlobalOptionsAfterSubcommand) {
  const Outcome r = run({"hh2", "--config", cfg("cyclic_chain_n3_l2.cfg"), "--max-degree", "0", "--format", "records"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("# g(1,0): dimension 1"), std::string::npos);
}

TEST(Cli, HeckeLines) {
  const Outcome r = run({"hecke", "--config", cfg("cyclic_chain_n3_l2.cfg")});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
}

TEST(Cli, TaftDemo) {
  const Outcome r = run({"taft-demo", "--t0", "0"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("gamma0 * gamma1 = t * s1"), std::string::npos);
  EXPECT_NE(r.out.find("t0 = 0: radical dimension 2, center dimension 1"), std::string::npos);
}

TEST(Cli, UdfAtSmallRoot) {
  const Outcome r = run({"check-udf", "--ell", "2"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("F = 1*[1 (x) 1] + 1*[t^1 D1 (x) D2]"), std::string::npos);
}
