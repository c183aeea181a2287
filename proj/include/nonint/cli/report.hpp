#pragma once

// Certificate serialization. Field names are frozen in docs/report-schema.md.

#include <optional>
#include <string>

#include "json.hpp"
#include "nonint/cli/config.hpp"
#include "nonint/criteria.hpp"

namespace nonint::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct ReportDocument {
  std::string version = kToolVersion;
  SystemSpec input;
  Certificate certificate;
  std::optional<TheoremClauseReport> theorem;  // builtin families only
  double seconds = 0.0;
};

nlohmann::json to_json(const ReportDocument& doc);

/// Inverse of to_json. Throws std::invalid_argument on a malformed document.
ReportDocument report_from_json(const nlohmann::json& j);

/// to_json(doc).dump(2), or without the timing block when `with_timing` is false.
std::string dump_report(const ReportDocument& doc, bool with_timing = true);

/// Exit code for a status: 0 nonintegrable, 1 inconclusive, 3 inapplicable.
int exit_code(Status s);
inline constexpr int kUsageErrorExit = 4;

Status status_from_string(const std::string& s);
Criterion criterion_from_string(const std::string& s);

}  // namespace nonint::cli
