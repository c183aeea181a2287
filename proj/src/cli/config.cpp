#include "nonint/cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nonint::cli {

namespace {

const std::set<std::string> kFoldHopfKeys = {"mu", "nu", "alpha", "s", "beta", "omega"};
const std::set<std::string> kDoubleHopfKeys = {"mu", "nu", "alpha", "beta", "s", "omega1", "omega2"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& text, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    if (v < -(1LL << 40) || v > (1LL << 40)) throw std::out_of_range(text);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw ParseError(line, 1, key + " must be an integer, got '" + text + "'");
  }
}

const std::set<std::string>& allowed_params(SystemKind k) {
  return k == SystemKind::fold_hopf ? kFoldHopfKeys : kDoubleHopfKeys;
}

QuadExt param(const SystemSpec& spec, const std::string& name, bool required) {
  const auto it = spec.params.find(name);
  if (it == spec.params.end()) {
    if (required) throw std::invalid_argument("missing parameter '" + name + "'");
    return QuadExt();
  }
  return parse_scalar(it->second, FieldSpec(spec.d));
}

int sign_param(const SystemSpec& spec) {
  const auto it = spec.params.find("s");
  if (it == spec.params.end()) return 1;
  const QuadExt s = parse_scalar(it->second, FieldSpec(spec.d));
  if (s == QuadExt(1L)) return 1;
  if (s == QuadExt(-1L)) return -1;
  throw std::invalid_argument("s must be 1 or -1");
}

}  // namespace

std::string to_string(SystemKind k) {
  switch (k) {
    case SystemKind::inline_system:
      return "inline";
    case SystemKind::fold_hopf:
      return "fold-hopf";
    case SystemKind::double_hopf:
      return "double-hopf";
  }
  return "unknown";
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile cfg;
  SystemSpec& spec = cfg.system;
  std::string section;
  std::set<std::string> seen;
  std::map<std::string, int> value_line;  // expression-valued keys, for error positions
  std::optional<std::string> family;
  int family_line = 0;
  bool has_inline = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(lineno, 1, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "field" && section != "system" && section != "check" && section != "grid") {
        throw ParseError(lineno, 1, "unknown section [" + section + "]");
      }
      if (section == "grid") cfg.has_grid = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, 1, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ParseError(lineno, 1, "key '" + key + "' outside any section");
    if (!seen.insert(section + "." + key).second) throw ParseError(lineno, 1, "duplicate key '" + key + "'");
    if (value.empty() && section != "grid") throw ParseError(lineno, static_cast<int>(eq) + 2, "empty value");

    if (section == "field") {
      if (key != "d") throw ParseError(lineno, 1, "unknown key '" + key + "' in [field]");
      spec.d = parse_int(value, lineno, "d");
      try {
        FieldSpec f(spec.d);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
      }
    } else if (section == "check") {
      if (key != "max_order") throw ParseError(lineno, 1, "unknown key '" + key + "' in [check]");
      spec.max_order = parse_int(value, lineno, "max_order");
      if (*spec.max_order < 2 || *spec.max_order > kMaxOrderCap) {
        throw ParseError(lineno, 1, "max_order must be in [2, " + std::to_string(kMaxOrderCap) + "]");
      }
    } else if (section == "system") {
      if (key == "P" || key == "Q" || key == "phi") {
        has_inline = true;
        (key == "P" ? spec.P : key == "Q" ? spec.Q : spec.phi) = value;
        value_line[key] = lineno;
      } else if (key == "family") {
        family = value;
        family_line = lineno;
      } else if (key == "chart") {
        spec.chart = parse_int(value, lineno, "chart");
        if (spec.chart != 1 && spec.chart != 2) throw ParseError(lineno, 1, "chart must be 1 or 2");
      } else if (kFoldHopfKeys.count(key) || kDoubleHopfKeys.count(key)) {
        spec.params[key] = value;
        value_line["param." + key] = lineno;
      } else {
        throw ParseError(lineno, 1, "unknown key '" + key + "' in [system]");
      }
    } else {
      cfg.grid.push_back({key, split_commas(value)});
      value_line["grid." + key] = lineno;
    }
  }

  if (family) {
    if (has_inline) throw ParseError(family_line, 1, "give either P/Q/phi or a family, not both");
    if (*family == "fold-hopf") {
      spec.kind = SystemKind::fold_hopf;
    } else if (*family == "double-hopf") {
      spec.kind = SystemKind::double_hopf;
    } else {
      throw ParseError(family_line, 1, "unknown family '" + *family + "'");
    }
    for (const auto& [k, v] : spec.params) {
      if (!allowed_params(spec.kind).count(k)) {
        throw ParseError(value_line["param." + k], 1, "parameter '" + k + "' does not belong to " + *family);
      }
    }
  } else {
    if (!spec.params.empty()) {
      throw ParseError(value_line["param." + spec.params.begin()->first], 1, "parameters need a family");
    }
    if (spec.P.empty() || spec.Q.empty()) throw ParseError(lineno, 1, "[system] needs P and Q, or a family");
  }

  // Validate every expression now so errors carry file positions.
  const FieldSpec field(spec.d);
  if (spec.kind == SystemKind::inline_system) {
    parse_bipoly(spec.P, field, value_line["P"]);
    parse_bipoly(spec.Q, field, value_line["Q"]);
    parse_ratfunc(spec.phi, field, value_line.count("phi") ? value_line["phi"] : 1);
  }
  for (const auto& [k, v] : spec.params) parse_scalar(v, field, value_line["param." + k]);
  for (const auto& axis : cfg.grid) {
    const int ln = value_line["grid." + axis.name];
    if (spec.kind == SystemKind::inline_system) throw ParseError(ln, 1, "[grid] needs a builtin family");
    if (!allowed_params(spec.kind).count(axis.name)) {
      throw ParseError(ln, 1, "grid axis '" + axis.name + "' is not a parameter of " + to_string(spec.kind));
    }
    for (const auto& v : axis.values) parse_scalar(v, field, ln);
  }
  if (spec.kind != SystemKind::inline_system) {
    std::vector<std::string> required = {"mu", "nu", "alpha"};
    if (spec.kind == SystemKind::double_hopf) required.push_back("beta");
    for (const auto& r : required) {
      const bool on_grid = std::any_of(cfg.grid.begin(), cfg.grid.end(), [&](const GridAxis& a) { return a.name == r; });
      if (!spec.params.count(r) && !on_grid) throw ParseError(family_line, 1, "missing parameter '" + r + "'");
    }
  }
  return cfg;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

int resolve_max_order(const SystemSpec& spec) {
  const int k = spec.max_order ? *spec.max_order : max_order_from_env();
  if (k < 2 || k > kMaxOrderCap) {
    throw std::invalid_argument("max order must be in [2, " + std::to_string(kMaxOrderCap) + "]");
  }
  return k;
}

FoldHopfParams fold_hopf_params(const SystemSpec& spec) {
  FoldHopfParams p;
  p.field = FieldSpec(spec.d);
  p.mu = param(spec, "mu", true);
  p.nu = param(spec, "nu", true);
  p.alpha = param(spec, "alpha", true);
  p.beta = param(spec, "beta", false);
  p.omega = param(spec, "omega", false);
  p.s = sign_param(spec);
  return p;
}

DoubleHopfParams double_hopf_params(const SystemSpec& spec) {
  DoubleHopfParams p;
  p.field = FieldSpec(spec.d);
  p.mu = param(spec, "mu", true);
  p.nu = param(spec, "nu", true);
  p.alpha = param(spec, "alpha", true);
  p.beta = param(spec, "beta", true);
  p.omega1 = param(spec, "omega1", false);
  p.omega2 = param(spec, "omega2", false);
  p.s = sign_param(spec);
  return p;
}

ReducedSystem build_system(const SystemSpec& spec) {
  const FieldSpec field(spec.d);
  switch (spec.kind) {
    case SystemKind::fold_hopf:
      return fold_hopf_system(fold_hopf_params(spec));
    case SystemKind::double_hopf:
      return double_hopf_system(double_hopf_params(spec), spec.chart);
    case SystemKind::inline_system:
      break;
  }
  ReducedSystem rs;
  rs.system.P = parse_bipoly(spec.P, field);
  rs.system.Q = parse_bipoly(spec.Q, field);
  rs.system.field = field;
  rs.system.label = "inline";
  rs.curve.phi = parse_ratfunc(spec.phi, field);
  return rs;
}

std::vector<SystemSpec> expand_grid(const ConfigFile& cfg) {
  std::vector<SystemSpec> out;
  if (cfg.grid.empty()) return out;
  for (const auto& axis : cfg.grid) {
    if (axis.values.empty()) return out;
  }
  std::vector<std::size_t> idx(cfg.grid.size(), 0);
  while (true) {
    SystemSpec s = cfg.system;
    for (std::size_t a = 0; a < cfg.grid.size(); ++a) s.params[cfg.grid[a].name] = cfg.grid[a].values[idx[a]];
    out.push_back(std::move(s));
    // Odometer increment, last axis fastest.
    std::size_t a = cfg.grid.size();
    while (a > 0) {
      --a;
      if (++idx[a] < cfg.grid[a].values.size()) break;
      idx[a] = 0;
      if (a == 0) return out;
    }
  }
}

}  // namespace nonint::cli
