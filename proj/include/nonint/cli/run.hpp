#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nonint/cli/report.hpp"

namespace nonint::cli {

/// Builds the system, certifies it and attaches the clause report for builtin
/// families. Throws ParseError, std::invalid_argument or SingularCurveError on bad input.
ReportDocument run_check(const SystemSpec& spec);

struct SweepEntry {
  std::size_t index = 0;
  SystemSpec spec;
  std::optional<ReportDocument> report;
  std::string error;  // set instead of report when the tuple failed
};

/// (status or "error", firing k or 0, criterion or "-").
using SummaryKey = std::tuple<std::string, int, std::string>;

struct SweepResult {
  std::vector<SweepEntry> entries;  // in grid order
  std::map<SummaryKey, int> summary;
};

/// Evaluates every grid tuple independently on up to `jobs` threads (0: hardware
/// concurrency). Errors stay inside their entry.
SweepResult sweep(const ConfigFile& cfg, unsigned jobs = 0);

nlohmann::json to_json(const SweepResult& r, bool with_timing = true);
std::string summary_table(const SweepResult& r);

}  // namespace nonint::cli
