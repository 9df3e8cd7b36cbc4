#ifndef QDEFORM_CLI_HPP
#define QDEFORM_CLI_HPP

// Subcommand dispatch for the qdeform executable. Exit status: 0 when every
// check passes, 1 on a verification failure, 2 on usage or config errors.

#include "qdeform/cohomology.hpp"
#include "qdeform/config.hpp"
#include "qdeform/deform.hpp"
#include "qdeform/findim.hpp"
#include "qdeform/hopf.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qdeform {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Text or one-record-per-line output of check results.
class Reporter {
public:
  Reporter(std::ostream& os, bool records) : os_(os), records_(records) {}

  void check(const CheckResult& r) {
    ok_ = ok_ && r.passed;
    if (!records_) {
      os_ << r << '\n';
      return;
    }
    os_ << slug(r.name) << ' ' << (r.passed ? "PASS" : "FAIL");
    if (r.bound >= 0) os_ << " degree<=" << r.bound;
    if (!r.note.empty()) os_ << " note=" << std::quoted(r.note);
    if (r.witness)
      os_ << " witness=" << std::quoted(r.witness->input) << " lhs=" << std::quoted(r.witness->lhs)
          << " rhs=" << std::quoted(r.witness->rhs);
    os_ << '\n';
  }

  void line(const std::string& s) { os_ << (records_ ? "# " : "") << s << '\n'; }
  bool ok() const { return ok_; }

  static std::string slug(const std::string& name) {
    std::string out;
    for (char c : name) {
      if (std::isalnum(static_cast<unsigned char>(c)))
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      else if (!out.empty() && out.back() != '-')
        out += '-';
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
  }

private:
  std::ostream& os_;
  bool records_;
  bool ok_ = true;
};

struct CliOptions {
  std::string config;
  std::string format = "text";
  int max_degree = -1;
  std::string ell = "2";
  int trunc = 6;
  std::string t0 = "1";
  std::string a, b;
  int n = 0;
};

namespace detail {

inline const EngineConfig& need_config(const std::optional<EngineConfig>& cfg, const char* cmd) {
  if (!cfg) throw UsageError(std::string(cmd) + " needs --config");
  return *cfg;
}

inline const AlgebraPtr& need_algebra(const EngineConfig& cfg) {
  if (!cfg.algebra) throw ConfigError({{0, "[cocycle] table", *cfg.cocycle_error}});
  return cfg.algebra;
}

inline const std::vector<DeformFactor>& need_factors(const EngineConfig& cfg) {
  need_algebra(cfg);
  if (cfg.factors.empty()) throw ConfigError({{0, "[deformation] factor", "no factors configured"}});
  return cfg.factors;
}

inline QContext context_for(const std::string& ell) {
  if (ell == "generic") return QContext::generic();
  int l = 0;
  try {
    l = parse_int(ell);
  } catch (const std::exception&) {
    throw UsageError("--ell expects an integer >= 2 or 'generic'");
  }
  if (l < 2) throw UsageError("--ell expects an integer >= 2 or 'generic'");
  return QContext::root_of_unity(l);
}

inline void run_check_udf(const CliOptions& o, Reporter& rep) {
  const QContext ctx = context_for(o.ell);
  rep.line("q = " + ctx.q().str() + (ctx.truncated() ? ", l = " + std::to_string(*ctx.ell()) : ", generic"));
  const auto alg = HopfAlgebra::h_q(ctx);
  rep.line("F = " + udf_element(alg, ctx.truncated() ? -1 : o.trunc).str());
  for (const auto& step : udf_proof_chain(ctx, o.trunc)) rep.check(step);
  rep.check(udf_check(ctx, o.trunc));
  rep.check(hopf_axiom_check(ctx));
  if (ctx.truncated()) rep.check(hopf_ideal_check(ctx));
}

inline void run_taft_demo(const CliOptions& o, Reporter& rep) {
  const auto T = taft_fixture();
  const auto& A = T.algebra;
  const Scalar t0 = parse_scalar(o.t0, A.field());
  rep.check(check_hminus1_module_algebra(A, T.sigma, T.d1, T.d2));
  rep.check(check_taft_presentation(A));
  const FinDimDeformation def(A, T.d1, T.d2);
  rep.line("deformed products a*b = ab + t D1(a) D2(b):");
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      const std::string p = def.product_str(i, j);
      if (p != "0") rep.line("  " + A.labels()[i] + " * " + A.labels()[j] + " = " + p);
    }
  const FinDimAlgebra At = def.specialize(t0);
  rep.line("t0 = " + t0.str() + ": radical dimension " + std::to_string(radical_dimension(At)) +
           ", center dimension " + std::to_string(center_dimension(At)));
  rep.line("t0 = 0: radical dimension " + std::to_string(radical_dimension(A)) + ", center dimension " +
           std::to_string(center_dimension(A)));
}

}  // namespace detail

/// args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CliOptions o;
  CLI::App app{"Exact verification engine for quantum-symmetry deformations of crossed products", "qdeform"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--config", o.config, "engine configuration file");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "records"}));

  auto degree = [&](CLI::App* s) { s->add_option("--max-degree", o.max_degree, "sweep degree bound")->check(CLI::NonNegativeNumber); };
  auto* cocycle = app.add_subcommand("check-cocycle", "two-cocycle identity of the configured cocycle");
  auto* modalg = app.add_subcommand("check-module-algebra", "module-algebra relations for each configured factor");
  degree(modalg);
  auto* udf = app.add_subcommand("check-udf", "universal deformation formula identities for H_q");
  udf->add_option("--ell", o.ell, "order of q, or 'generic'");
  udf->add_option("--trunc", o.trunc, "t-truncation for generic q")->check(CLI::PositiveNumber);
  auto* assoc = app.add_subcommand("check-assoc", "associativity of the star product");
  degree(assoc);
  auto* star_cmd = app.add_subcommand("star", "star product of two elements");
  star_cmd->add_option("--a", o.a, "left element")->required();
  star_cmd->add_option("--b", o.b, "right element")->required();
  auto* hecke = app.add_subcommand("hecke", "Hecke-type relations from the t-linear commutators");
  auto* hh2 = app.add_subcommand("hh2", "HH^2 component dimensions per group element");
  degree(hh2);
  auto* chain = app.add_subcommand("chainmap-test", "bar-to-Koszul comparison map checks");
  degree(chain);
  chain->add_option("--n", o.n, "number of variables (default: config n, else 3)")->check(CLI::PositiveNumber);
  auto* taft = app.add_subcommand("taft-demo", "four-dimensional quiver algebra deformation");
  taft->add_option("--t0", o.t0, "specialization of t");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Reporter rep(out, o.format == "records");
  try {
    std::optional<EngineConfig> cfg;
    if (!o.config.empty()) cfg = load_config(o.config);
    const int d = o.max_degree >= 0 ? o.max_degree : (cfg ? cfg->max_degree : 3);

    if (*cocycle) {
      const auto& c = detail::need_config(cfg, "check-cocycle");
      rep.check(cocycle_check(*c.alpha, *c.group));
    } else if (*modalg) {
      for (const auto& f : detail::need_factors(detail::need_config(cfg, "check-module-algebra")))
        rep.check(check_module_algebra(f, d).as("module algebra for " + f.str()));
    } else if (*udf) {
      detail::run_check_udf(o, rep);
    } else if (*assoc) {
      const auto& fs = detail::need_factors(detail::need_config(cfg, "check-assoc"));
      if (fs.size() > 1) {
        CheckResult pre = check_commuting_factors(fs, d);
        const bool mixed = fs.size() == 2 && fs[1].g() == fs[0].algebra()->group().inv(fs[0].g());
        if (!pre && mixed) pre = check_mixed_relations(fs[0], fs[1], d);
        rep.check(pre);
      }
      try {
        rep.check(check_associativity(StarProduct::create(fs, d), d));
      } catch (const StarError& e) {
        rep.check(CheckResult::fail_note("star product precondition", e.what(), d));
      }
    } else if (*star_cmd) {
      const auto& c = detail::need_config(cfg, "star");
      const auto& alg = detail::need_algebra(c);
      const auto sp = StarProduct::create(detail::need_factors(c));
      const TPoly p = sp(parse_element(o.a, alg), parse_element(o.b, alg));
      rep.line("(" + o.a + ") * (" + o.b + ") = " + p.str());
    } else if (*hecke) {
      const auto& c = detail::need_config(cfg, "hecke");
      const auto sp = StarProduct::create(detail::need_factors(c));
      for (const auto& r : hecke_relations(sp)) rep.line(r.str(*c.algebra));
    } else if (*hh2) {
      const auto& c = detail::need_config(cfg, "hh2");
      const auto& alg = detail::need_algebra(c);
      for (int g = 0; g < alg->group().size(); ++g) {
        const auto comp = hh2_component(alg, g, d);
        rep.line(alg->group().element(g).str() + ": dimension " + std::to_string(comp.dimension) +
                 (comp.reason ? " (ruled out: " + *comp.reason + ")" : "") + " [degree <= " + std::to_string(d) + "]");
        for (const auto& b : comp.basis) rep.line("  " + b);
      }
    } else if (*chain) {
      const int n = o.n > 0 ? o.n : (cfg ? cfg->n : 3);
      rep.check(check_chain_map(n, d));
    } else if (*taft) {
      detail::run_taft_demo(o, rep);
    }
  } catch (const ConfigError& e) {
    err << "config error:\n" << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StarError& e) {
    err << "star product error: " << e.what() << '\n';
    return kExitFail;
  }
  return rep.ok() ? kExitPass : kExitFail;
}

inline int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace qdeform

#endif  // QDEFORM_CLI_HPP
