#include "nonint/cli/run.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

namespace nonint::cli {

ReportDocument run_check(const SystemSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ReportDocument doc;
  doc.input = spec;
  const ReducedSystem rs = build_system(spec);
  doc.certificate = certify(rs.system, rs.curve, resolve_max_order(spec));
  if (spec.kind == SystemKind::fold_hopf) doc.theorem = theorem_conditions(fold_hopf_params(spec));
  if (spec.kind == SystemKind::double_hopf) doc.theorem = theorem_conditions(double_hopf_params(spec), spec.chart);
  doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return doc;
}

SweepResult sweep(const ConfigFile& cfg, unsigned jobs) {
  SweepResult out;
  const auto specs = expand_grid(cfg);
  out.entries.resize(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    out.entries[i].index = i;
    out.entries[i].spec = specs[i];
  }
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < out.entries.size(); i = next++) {
      auto& e = out.entries[i];
      try {
        e.report = run_check(e.spec);
      } catch (const std::exception& ex) {
        e.error = ex.what();
      }
    }
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, specs.size()); ++t) {
    pool.push_back(std::async(std::launch::async, worker));
  }
  for (auto& f : pool) f.get();

  for (const auto& e : out.entries) {
    if (!e.report) {
      ++out.summary[{"error", 0, "-"}];
      continue;
    }
    const auto& c = e.report->certificate;
    ++out.summary[{to_string(c.status), c.firing_order.value_or(0),
                   c.firing_criterion ? to_string(*c.firing_criterion) : "-"}];
  }
  return out;
}

nlohmann::json to_json(const SweepResult& r, bool with_timing) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json item = {{"index", e.index}, {"params", e.spec.params}};
    if (e.report) {
      auto rep = to_json(*e.report);
      if (!with_timing) rep.erase("timing");
      item["report"] = rep;
      item["error"] = nullptr;
    } else {
      item["report"] = nullptr;
      item["error"] = e.error;
    }
    reports.push_back(item);
  }
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& [key, count] : r.summary) {
    const auto& [status, k, crit] = key;
    summary.push_back({{"status", status}, {"k", k}, {"criterion", crit}, {"count", count}});
  }
  return {{"version", kToolVersion}, {"reports", reports}, {"summary", summary}};
}

std::string summary_table(const SweepResult& r) {
  std::ostringstream os;
  os << "tuples: " << r.entries.size() << "\n";
  os << "status         k   criterion  count\n";
  for (const auto& [key, count] : r.summary) {
    const auto& [status, k, crit] = key;
    std::string st = status;
    st.resize(14, ' ');
    std::string ks = k == 0 ? "-" : std::to_string(k);
    ks.resize(3, ' ');
    std::string cs = crit;
    cs.resize(10, ' ');
    os << st << " " << ks << " " << cs << " " << count << "\n";
  }
  return os.str();
}

}  // namespace nonint::cli
