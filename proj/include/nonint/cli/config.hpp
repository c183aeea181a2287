#pragma once

// Flat key-value configuration:
//
//   [field]   d = 2
//   [system]  P = ..., Q = ..., phi = ...        (inline system)
//             family = fold-hopf | double-hopf, chart = 1 | 2, mu = ..., ...
//   [check]   max_order = 9
//   [grid]    alpha = rt, 1+rt, 1/2             (sweep axes, builtin families only)
//
// '#' starts a comment. Values are expressions in the grammar of expr.hpp.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nonint/cli/expr.hpp"
#include "nonint/unfoldings.hpp"

namespace nonint::cli {

enum class SystemKind { inline_system, fold_hopf, double_hopf };

struct SystemSpec {
  std::int64_t d = 1;
  SystemKind kind = SystemKind::inline_system;
  std::string P, Q, phi = "0";      // inline systems
  int chart = 1;                    // double-hopf
  std::map<std::string, std::string> params;  // builtin parameter texts
  std::optional<int> max_order;     // unset: NONINT_MAX_ORDER or the default

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

struct GridAxis {
  std::string name;
  std::vector<std::string> values;
  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

struct ConfigFile {
  SystemSpec system;
  std::vector<GridAxis> grid;  // in file order; the first axis varies slowest
  bool has_grid = false;
};

/// Throws ParseError (with the file line) on malformed input.
ConfigFile parse_config(std::string_view text);
ConfigFile load_config(const std::string& path);

std::string to_string(SystemKind k);

/// The order bound to use: the spec value, else NONINT_MAX_ORDER, else the default.
/// Throws std::invalid_argument outside [2, 25].
int resolve_max_order(const SystemSpec& spec);

/// Builds the planar system and curve. Throws ParseError or std::invalid_argument.
ReducedSystem build_system(const SystemSpec& spec);

FoldHopfParams fold_hopf_params(const SystemSpec& spec);
DoubleHopfParams double_hopf_params(const SystemSpec& spec);

/// Every combination of grid values applied to the base spec, in grid order.
/// An empty grid yields no tuples.
std::vector<SystemSpec> expand_grid(const ConfigFile& cfg);

}  // namespace nonint::cli
