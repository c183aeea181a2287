// Command-line front end: check, fold-hopf, double-hopf, sweep.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "nonint/cli/run.hpp"

using namespace nonint;
using namespace nonint::cli;

namespace {

void print_summary(const ReportDocument& doc, std::ostream& os) {
  const Certificate& c = doc.certificate;
  os << "system: P = " << c.P << ", Q = " << c.Q << ", curve eta = " << c.phi;
  if (c.field_d != 1) os << ", rt = sqrt(" << c.field_d << ")";
  os << "\n";
  os << "status: " << to_string(c.status) << "\n";
  if (c.firing_order) {
    os << "order k = " << *c.firing_order << ", criterion " << to_string(*c.firing_criterion) << "\n";
  } else {
    os << "reason: " << c.reason << "\n";
  }
  for (const auto& line : c.trace) os << "  " << line << "\n";
  if (doc.theorem) {
    os << "theorem clauses (" << to_string(doc.theorem->family) << "):";
    for (const auto& cl : doc.theorem->clauses) os << " " << cl.name << "=" << (cl.holds ? "holds" : "fails");
    os << "\n";
  }
}

void write_json(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << text << "\n";
}

int report_and_exit(const ReportDocument& doc, const std::string& json_path) {
  if (json_path != "-") print_summary(doc, std::cout);
  if (!json_path.empty()) write_json(json_path, dump_report(doc));
  return exit_code(doc.certificate.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certifies meromorphic nonintegrability of planar polynomial vector fields along rational invariant curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string file, json_path;
  std::optional<int> max_order;
  unsigned jobs = 0;

  auto* check = app.add_subcommand("check", "certify the system described in a config file");
  check->add_option("file", file, "config file")->required();
  check->add_option("--max-order", max_order, "largest variational order K (2..25)");
  check->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  std::map<std::string, std::string> fh, dh;
  std::int64_t d = 1;
  int chart = 1;
  auto* fold = app.add_subcommand("fold-hopf", "certify the reduced fold-Hopf system");
  for (const char* p : {"mu", "nu", "alpha"}) fold->add_option(std::string("--") + p, fh[p])->required();
  for (const char* p : {"s", "beta", "omega"}) fold->add_option(std::string("--") + p, fh[p]);
  fold->add_option("--d", d, "field Q(sqrt(d)); 'rt' denotes sqrt(d)");
  fold->add_option("--max-order", max_order, "largest variational order K (2..25)");
  fold->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* dbl = app.add_subcommand("double-hopf", "certify a reduced double-Hopf system");
  for (const char* p : {"mu", "nu", "alpha", "beta"}) dbl->add_option(std::string("--") + p, dh[p])->required();
  for (const char* p : {"s", "omega1", "omega2"}) dbl->add_option(std::string("--") + p, dh[p]);
  dbl->add_option("--chart", chart, "1 or 2")->check(CLI::IsMember({1, 2}));
  dbl->add_option("--d", d, "field Q(sqrt(d)); 'rt' denotes sqrt(d)");
  dbl->add_option("--max-order", max_order, "largest variational order K (2..25)");
  dbl->add_option("--json", json_path, "write the JSON report here ('-' for stdout)");

  auto* sw = app.add_subcommand("sweep", "certify every tuple of the [grid] section");
  sw->add_option("file", file, "config file with a [grid] section")->required();
  sw->add_option("--json", json_path, "write all reports here ('-' for stdout)");
  sw->add_option("--jobs", jobs, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageErrorExit;
  }

  try {
    if (*check) {
      ConfigFile cfg = load_config(file);
      if (max_order) cfg.system.max_order = max_order;
      return report_and_exit(run_check(cfg.system), json_path);
    }
    if (*fold || *dbl) {
      SystemSpec spec;
      spec.d = d;
      spec.kind = *fold ? SystemKind::fold_hopf : SystemKind::double_hopf;
      spec.chart = chart;
      for (const auto& [k, v] : *fold ? fh : dh) {
        if (!v.empty()) spec.params[k] = v;
      }
      spec.max_order = max_order;
      FieldSpec check_field(d);
      return report_and_exit(run_check(spec), json_path);
    }
    const ConfigFile cfg = load_config(file);
    if (!cfg.has_grid) throw std::invalid_argument("'" + file + "' has no [grid] section");
    const SweepResult res = sweep(cfg, jobs);
    if (json_path != "-") std::cout << summary_table(res);
    if (!json_path.empty()) write_json(json_path, to_json(res).dump(2));
    for (const auto& e : res.entries) {
      if (!e.error.empty()) std::cerr << "tuple " << e.index << ": " << e.error << "\n";
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageErrorExit;
  }
}
