#ifndef QDEFORM_CONFIG_HPP
#define QDEFORM_CONFIG_HPP

// Sectioned key-value engine configuration:
//
//   [scalars]     root_order = N
//   [space]       n = 3            nilpotency = 0,0,0
//   [group]       orders = 2,2     action = 1,-1,0 / 0,1,-1
//   [cocycle]     type = trivial | bicharacter | table
//                 matrix = 0,-1 / 0,0          (bicharacter exponents of zeta_N)
//                 table = 0,0,0,0 / ...        (|G| x |G| exponents of zeta_N)
//   [deformation] factor = g=1,0; pair=1,2; s=1   (repeatable; 1-based pair)
//   [sweep]       max_degree = 3
//
// '#' starts a comment; matrices are '/'-separated rows.

#include "qdeform/action.hpp"
#include "qdeform/crossed.hpp"
#include "qdeform/group.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

struct Diagnostic {
  int line;  // 0 when not tied to a line
  std::string key;
  std::string message;

  std::string str() const {
    return (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + key + ": " + message;
  }
};

class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(std::vector<Diagnostic> diags)
      : std::runtime_error(join(diags)), diagnostics_(std::move(diags)) {}
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
  static std::string join(const std::vector<Diagnostic>& ds) {
    std::string out;
    for (const auto& d : ds) out += (out.empty() ? "" : "\n") + d.str();
    return out;
  }
  std::vector<Diagnostic> diagnostics_;
};

struct FactorSpec {
  std::vector<int> g;
  int i = 0;  // 0-based
  int j = 0;
  std::string s = "1";
  int line = 0;
};

struct EngineConfig {
  int root_order = 1;
  int n = 0;
  std::vector<int> nilpotency;
  std::vector<int> orders;
  IntMatrix action;
  std::string cocycle_type = "trivial";
  IntMatrix cocycle_matrix;
  IntMatrix cocycle_table;
  std::vector<FactorSpec> factor_specs;
  int max_degree = 3;

  // Built from the above by parse_config.
  std::optional<GroupSpec> group;
  std::optional<TwoCocycle> alpha;
  std::optional<std::string> cocycle_error;  // table entries failing the cocycle identity
  AlgebraPtr algebra;                        // null when cocycle_error is set
  std::vector<DeformFactor> factors;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

inline int parse_int(const std::string& s) {
  std::size_t pos = 0;
  const int v = std::stoi(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (trim(s).empty()) return out;
  for (const auto& t : split(s, ',')) {
    if (t.empty()) throw std::invalid_argument("empty list entry");
    out.push_back(parse_int(t));
  }
  return out;
}

inline IntMatrix parse_matrix(const std::string& s) {
  IntMatrix out;
  for (const auto& row : split(s, '/')) out.push_back(parse_int_list(row));
  return out;
}

struct RawEntry {
  std::string value;
  int line;
};

}  // namespace detail

/// Parses and validates; throws ConfigError listing every problem found.
inline EngineConfig parse_config(const std::string& text) {
  using detail::RawEntry;
  std::vector<Diagnostic> diags;
  std::map<std::string, RawEntry> entries;  // "section.key"
  std::vector<RawEntry> factor_lines;
  static const std::map<std::string, std::vector<std::string>> known = {
      {"scalars", {"root_order"}},         {"space", {"n", "nilpotency"}},
      {"group", {"orders", "action"}},     {"cocycle", {"type", "matrix", "table"}},
      {"deformation", {"factor"}},         {"sweep", {"max_degree"}},
  };

  std::istringstream in(text);
  std::string raw, section;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        diags.push_back({lineno, "syntax", "unterminated section header"});
        continue;
      }
      section = detail::trim(line.substr(1, line.size() - 2));
      if (!known.count(section)) diags.push_back({lineno, "[" + section + "]", "unknown section"});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      diags.push_back({lineno, "syntax", "expected 'key = value'"});
      continue;
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (section.empty()) {
      diags.push_back({lineno, key, "key outside any section"});
      continue;
    }
    const auto& keys = known.count(section) ? known.at(section) : std::vector<std::string>{};
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      diags.push_back({lineno, "[" + section + "] " + key, "unknown key"});
      continue;
    }
    if (section == "deformation") {
      factor_lines.push_back({value, lineno});
    } else {
      const std::string full = section + "." + key;
      if (entries.count(full)) diags.push_back({lineno, "[" + section + "] " + key, "duplicate key"});
      entries[full] = {value, lineno};
    }
  }

  EngineConfig cfg;
  auto get = [&](const std::string& full) -> const RawEntry* {
    auto it = entries.find(full);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto label = [](const std::string& full) {
    const auto dot = full.find('.');
    return "[" + full.substr(0, dot) + "] " + full.substr(dot + 1);
  };
  // Runs f on the entry, turning parse failures into diagnostics.
  auto with = [&](const std::string& full, bool required, auto f) {
    const RawEntry* e = get(full);
    if (!e) {
      if (required) diags.push_back({0, label(full), "missing"});
      return;
    }
    try {
      f(e->value);
    } catch (const std::exception& ex) {
      diags.push_back({e->line, label(full), ex.what()});
    }
  };
  auto line_of = [&](const std::string& full) { return get(full) ? get(full)->line : 0; };

  with("scalars.root_order", true, [&](const std::string& v) {
    cfg.root_order = detail::parse_int(v);
    if (cfg.root_order < 1) throw std::invalid_argument("must be positive");
  });
  with("space.n", true, [&](const std::string& v) {
    cfg.n = detail::parse_int(v);
    if (cfg.n < 1 || cfg.n > kMaxVariables) throw std::invalid_argument("must be between 1 and 8");
  });
  with("space.nilpotency", false, [&](const std::string& v) { cfg.nilpotency = detail::parse_int_list(v); });
  if (!cfg.nilpotency.empty() && static_cast<int>(cfg.nilpotency.size()) != cfg.n)
    diags.push_back({line_of("space.nilpotency"), "[space] nilpotency", "needs one bound per variable"});
  with("group.orders", true, [&](const std::string& v) {
    cfg.orders = detail::parse_int_list(v);
    if (cfg.orders.empty()) throw std::invalid_argument("needs at least one cyclic factor");
    for (int m : cfg.orders)
      if (m < 1 || cfg.root_order % m != 0)
        throw std::invalid_argument(std::to_string(m) + " does not divide N = " + std::to_string(cfg.root_order));
  });
  with("group.action", true, [&](const std::string& v) {
    cfg.action = detail::parse_matrix(v);
    if (cfg.action.size() != cfg.orders.size()) throw std::invalid_argument("needs one row per cyclic factor");
    for (const auto& row : cfg.action)
      if (static_cast<int>(row.size()) != cfg.n) throw std::invalid_argument("each row needs n entries");
  });
  with("cocycle.type", false, [&](const std::string& v) {
    if (v != "trivial" && v != "bicharacter" && v != "table")
      throw std::invalid_argument("expected trivial, bicharacter or table");
    cfg.cocycle_type = v;
  });
  with("cocycle.matrix", cfg.cocycle_type == "bicharacter",
       [&](const std::string& v) { cfg.cocycle_matrix = detail::parse_matrix(v); });
  with("cocycle.table", cfg.cocycle_type == "table",
       [&](const std::string& v) { cfg.cocycle_table = detail::parse_matrix(v); });
  with("sweep.max_degree", false, [&](const std::string& v) {
    cfg.max_degree = detail::parse_int(v);
    if (cfg.max_degree < 0) throw std::invalid_argument("must be nonnegative");
  });
  for (const auto& fl : factor_lines) {
    try {
      FactorSpec spec;
      spec.line = fl.line;
      bool have_g = false, have_pair = false;
      for (const auto& part : detail::split(fl.value, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected name=value in '" + part + "'");
        const std::string k = detail::trim(part.substr(0, eq)), v = detail::trim(part.substr(eq + 1));
        if (k == "g") {
          spec.g = detail::parse_int_list(v);
          have_g = true;
        } else if (k == "pair") {
          const auto p = detail::parse_int_list(v);
          if (p.size() != 2) throw std::invalid_argument("pair needs two coordinates");
          spec.i = p[0] - 1;
          spec.j = p[1] - 1;
          have_pair = true;
        } else if (k == "s") {
          spec.s = v;
        } else {
          throw std::invalid_argument("unknown factor field '" + k + "'");
        }
      }
      if (!have_g || !have_pair) throw std::invalid_argument("needs g= and pair=");
      cfg.factor_specs.push_back(spec);
    } catch (const std::exception& ex) {
      diags.push_back({fl.line, "[deformation] factor", ex.what()});
    }
  }
  if (!diags.empty()) throw ConfigError(diags);

  // Semantic objects.
  const ScalarField F = ScalarField::cyclotomic(cfg.root_order);
  try {
    cfg.group.emplace(cfg.orders, cfg.n, cfg.action, F);
  } catch (const std::exception& ex) {
    throw ConfigError({{line_of("group.action"), "[group] action", ex.what()}});
  }
  const GroupSpec& G = *cfg.group;
  try {
    if (cfg.cocycle_type == "trivial") {
      cfg.alpha = TwoCocycle::trivial(G);
    } else if (cfg.cocycle_type == "bicharacter") {
      cfg.alpha = TwoCocycle::bicharacter(G, cfg.cocycle_matrix);
    } else {
      if (static_cast<int>(cfg.cocycle_table.size()) != G.size())
        throw std::invalid_argument("needs |G| = " + std::to_string(G.size()) + " rows");
      std::map<std::pair<int, int>, Scalar> values;
      for (int a = 0; a < G.size(); ++a) {
        if (static_cast<int>(cfg.cocycle_table[a].size()) != G.size())
          throw std::invalid_argument("row " + std::to_string(a + 1) + " needs |G| entries");
        for (int b = 0; b < G.size(); ++b) values.insert_or_assign({a, b}, G.zeta(cfg.cocycle_table[a][b]));
      }
      cfg.alpha = TwoCocycle::table(G, values, false);
    }
  } catch (const std::exception& ex) {
    const std::string full = cfg.cocycle_type == "table" ? "cocycle.table" : "cocycle.matrix";
    throw ConfigError({{line_of(full), label(full), ex.what()}});
  }
  if (const CheckResult r = cocycle_check(*cfg.alpha, G); !r) {
    cfg.cocycle_error = "not a valid two-cocycle (" + (r.witness ? r.witness->input : r.note) + ")";
    return cfg;
  }
  cfg.algebra = make_algebra(G, *cfg.alpha, cfg.nilpotency);
  for (const auto& spec : cfg.factor_specs) {
    try {
      if (static_cast<int>(spec.g.size()) != G.rank()) throw std::invalid_argument("g needs one exponent per factor");
      const int g = G.index(GroupElement{spec.g});
      const CPElement s = parse_element(spec.s, cfg.algebra);
      cfg.factors.push_back(DeformFactor::create(cfg.algebra, g, spec.i, spec.j, s));
    } catch (const std::exception& ex) {
      diags.push_back({spec.line, "[deformation] factor", ex.what()});
    }
  }
  if (!diags.empty()) throw ConfigError(diags);
  return cfg;
}

inline EngineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({{0, "--config", "cannot read " + path}});
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace qdeform

#endif  // QDEFORM_CONFIG_HPP
