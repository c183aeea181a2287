#include "nonint/cli/report.hpp"

namespace nonint::cli {

using nlohmann::json;

namespace {

// ---- primitive encoders ---------------------------------------------------

json deg_json(Degree d) { return d.is_neg_inf() ? json(nullptr) : json(d.value()); }

Degree deg_from(const json& j) { return j.is_null() ? Degree::neg_inf() : Degree(j.get<int>()); }

template <class T, class F>
json opt_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : json(nullptr);
}

json strings(const std::vector<std::string>& v) { return json(v); }

class Decoder {
 public:
  explicit Decoder(FieldSpec field) : field_(field) {}
  UPoly upoly(const json& j) const {
    const RatFunc f = parse_ratfunc(j.get<std::string>(), field_);
    if (!f.is_polynomial()) throw std::invalid_argument("expected a polynomial, got " + j.get<std::string>());
    return f.num() * f.den().coeff(0).inverse();
  }
  RatFunc ratfunc(const json& j) const { return parse_ratfunc(j.get<std::string>(), field_); }
  QuadExt scalar(const json& j) const { return parse_scalar(j.get<std::string>(), field_); }

 private:
  FieldSpec field_;
};

// ---- pieces ---------------------------------------------------------------

json class_json(const FactorClass& c) { return {{"factor", print(RatFunc(c.factor))}, {"multiplicity", c.multiplicity}}; }

FactorClass class_from(const json& j, const Decoder& dec) {
  return {dec.upoly(j.at("factor")), j.at("multiplicity").get<int>()};
}

json residue_json(const ResidueEntry& r) {
  return {{"class", class_json(r.cls)}, {"residue", print(RatFunc(r.residue))}};
}

ResidueEntry residue_from(const json& j, const Decoder& dec) {
  return {class_from(j.at("class"), dec), dec.upoly(j.at("residue"))};
}

json omega_json(const OmegaData& om) {
  json res = json::array();
  for (const auto& r : om.residues) res.push_back(residue_json(r));
  return {{"exp_part", print(om.exp_part)}, {"residues", res}, {"regular_at_infinity", om.regular_at_infinity}};
}

OmegaData omega_from(const json& j, const Decoder& dec) {
  OmegaData om;
  om.exp_part = dec.ratfunc(j.at("exp_part"));
  for (const auto& r : j.at("residues")) om.residues.push_back(residue_from(r, dec));
  om.regular_at_infinity = j.at("regular_at_infinity").get<bool>();
  return om;
}

H1Reason h1_reason_from(const std::string& s) {
  for (auto r : {H1Reason::nonzero_exp_part, H1Reason::irrational_residue, H1Reason::all_residues_rational}) {
    if (to_string(r) == s) return r;
  }
  throw std::invalid_argument("unknown H1 reason '" + s + "'");
}

json h1_json(const H1Verdict& v) {
  json rr = json::array();
  for (const auto& r : v.rational_residues) rr.push_back(residue_json(r));
  return {{"holds", v.holds},
          {"reason", to_string(v.reason)},
          {"exp_part", print(v.exp_part)},
          {"residue", opt_json(v.residue, residue_json)},
          {"rational_residues", rr}};
}

H1Verdict h1_from(const json& j, const Decoder& dec) {
  H1Verdict v;
  v.holds = j.at("holds").get<bool>();
  v.reason = h1_reason_from(j.at("reason").get<std::string>());
  v.exp_part = dec.ratfunc(j.at("exp_part"));
  if (!j.at("residue").is_null()) v.residue = residue_from(j.at("residue"), dec);
  for (const auto& r : j.at("rational_residues")) v.rational_residues.push_back(residue_from(r, dec));
  return v;
}

json partition_json(const RootPartition& p) {
  json shared = json::array();
  for (const auto& c : p.shared) shared.push_back({{"factor", print(RatFunc(c.factor))}, {"b1", c.b1}, {"a1", c.a1}});
  json fresh = json::array();
  for (const auto& c : p.fresh) fresh.push_back({{"factor", print(RatFunc(c.factor))}, {"ak", c.ak}});
  return {{"shared", shared}, {"new", fresh},           {"n1", p.n1},
          {"nk", p.nk},       {"rad1", print(RatFunc(p.rad1))}, {"radk", print(RatFunc(p.radk))}};
}

RootPartition partition_from(const json& j, const Decoder& dec) {
  RootPartition p;
  for (const auto& c : j.at("shared")) {
    p.shared.push_back({dec.upoly(c.at("factor")), c.at("b1").get<int>(), c.at("a1").get<int>()});
  }
  for (const auto& c : j.at("new")) p.fresh.push_back({dec.upoly(c.at("factor")), c.at("ak").get<int>()});
  p.n1 = j.at("n1").get<int>();
  p.nk = j.at("nk").get<int>();
  p.rad1 = dec.upoly(j.at("rad1"));
  p.radk = dec.upoly(j.at("radk"));
  return p;
}

json profile_json(const SimplicityProfile& prof) {
  json classes = json::array();
  for (const auto& c : prof.classes) {
    classes.push_back({{"bad_b", opt_json(c.bad_b, [](const QuadExt& b) { return json(print(b)); })},
                       {"simple_at_b1", c.simple_at_b1},
                       {"simple_for_all_b", c.simple_for_all_b},
                       {"simple_whenever_bj_gt_1", c.simple_whenever_bj_gt_1}});
  }
  return {{"classes", classes}, {"all_simple_whenever_bj_gt_1", prof.all_simple_whenever_bj_gt_1}};
}

SimplicityProfile profile_from(const json& j, const Decoder& dec) {
  SimplicityProfile prof;
  for (const auto& c : j.at("classes")) {
    ClassSimplicity cs;
    if (!c.at("bad_b").is_null()) cs.bad_b = dec.scalar(c.at("bad_b"));
    cs.simple_at_b1 = c.at("simple_at_b1").get<bool>();
    cs.simple_for_all_b = c.at("simple_for_all_b").get<bool>();
    cs.simple_whenever_bj_gt_1 = c.at("simple_whenever_bj_gt_1").get<bool>();
    prof.classes.push_back(cs);
  }
  prof.all_simple_whenever_bj_gt_1 = j.at("all_simple_whenever_bj_gt_1").get<bool>();
  return prof;
}

json witness_json(const H2FailureWitness& w) {
  return {{"k", w.k},
          {"solution", print(RatFunc(w.solution))},
          {"theta_log_derivative", print(w.theta_log_derivative)},
          {"theta_ratio", print(w.theta_ratio)}};
}

H2FailureWitness witness_from(const json& j, const Decoder& dec) {
  return {j.at("k").get<int>(), dec.upoly(j.at("solution")), dec.ratfunc(j.at("theta_log_derivative")),
          dec.ratfunc(j.at("theta_ratio"))};
}

json criteria_json(const std::vector<Criterion>& v) {
  json out = json::array();
  for (auto c : v) out.push_back(to_string(c));
  return out;
}

json order_json(const CriterionOutcome& o) {
  const auto& d = o.diagnostics;
  return {
      {"k", o.k},
      {"criterion", opt_json(o.fired, [](Criterion c) { return json(to_string(c)); })},
      {"holding", criteria_json(o.holding)},
      {"precondition_failures", strings(o.precondition_failures)},
      {"simple_whenever_bj_gt_1", o.simple_whenever_bj_gt_1},
      {"witness", opt_json(o.h2_failure, witness_json)},
      {"partition", partition_json(o.partition)},
      {"simplicity", profile_json(o.profile)},
      {"degrees",
       {{"kappa1d", deg_json(d.deg_kappa1d)},
        {"kappakn", deg_json(d.deg_kappakn)},
        {"rho", deg_json(d.deg_rho)},
        {"rho_bar", deg_json(d.deg_rho_bar)}}},
      {"rho", print(RatFunc(d.rho))},
      {"rho0", opt_json(d.rho0, [](const QuadExt& c) { return json(print(c)); })},
      {"rho_bar", print(RatFunc(d.rho_bar))},
      {"rho_tilde", print(RatFunc(d.rho_tilde))},
      {"n_bar", d.n_bar},
      {"rho_degenerate", d.rho_degenerate},
      {"solution_exists", d.solution_exists},
      {"solution_degree_bound", d.solution_degree_bound},
      {"notes", strings(o.notes)},
  };
}

CriterionOutcome order_from(const json& j, const Decoder& dec) {
  CriterionOutcome o;
  o.k = j.at("k").get<int>();
  if (!j.at("criterion").is_null()) o.fired = criterion_from_string(j.at("criterion").get<std::string>());
  for (const auto& c : j.at("holding")) o.holding.push_back(criterion_from_string(c.get<std::string>()));
  o.precondition_failures = j.at("precondition_failures").get<std::vector<std::string>>();
  o.simple_whenever_bj_gt_1 = j.at("simple_whenever_bj_gt_1").get<bool>();
  if (!j.at("witness").is_null()) o.h2_failure = witness_from(j.at("witness"), dec);
  o.partition = partition_from(j.at("partition"), dec);
  o.profile = profile_from(j.at("simplicity"), dec);
  auto& d = o.diagnostics;
  const auto& deg = j.at("degrees");
  d.deg_kappa1d = deg_from(deg.at("kappa1d"));
  d.deg_kappakn = deg_from(deg.at("kappakn"));
  d.deg_rho = deg_from(deg.at("rho"));
  d.deg_rho_bar = deg_from(deg.at("rho_bar"));
  d.rho = dec.upoly(j.at("rho"));
  if (!j.at("rho0").is_null()) d.rho0 = dec.scalar(j.at("rho0"));
  d.rho_bar = dec.upoly(j.at("rho_bar"));
  d.rho_tilde = dec.upoly(j.at("rho_tilde"));
  d.n_bar = j.at("n_bar").get<int>();
  d.rho_degenerate = j.at("rho_degenerate").get<bool>();
  d.solution_exists = j.at("solution_exists").get<bool>();
  d.solution_degree_bound = j.at("solution_degree_bound").get<int>();
  o.notes = j.at("notes").get<std::vector<std::string>>();
  return o;
}

json input_json(const SystemSpec& s) {
  json j = {{"d", s.d},
            {"kind", to_string(s.kind)},
            {"max_order", s.max_order ? json(*s.max_order) : json(nullptr)}};
  if (s.kind == SystemKind::inline_system) {
    j["P"] = s.P;
    j["Q"] = s.Q;
    j["phi"] = s.phi;
  } else {
    j["params"] = s.params;
    if (s.kind == SystemKind::double_hopf) j["chart"] = s.chart;
  }
  return j;
}

SystemSpec input_from(const json& j) {
  SystemSpec s;
  s.d = j.at("d").get<std::int64_t>();
  const std::string kind = j.at("kind").get<std::string>();
  if (!j.at("max_order").is_null()) s.max_order = j.at("max_order").get<int>();
  if (kind == "inline") {
    s.kind = SystemKind::inline_system;
    s.P = j.at("P").get<std::string>();
    s.Q = j.at("Q").get<std::string>();
    s.phi = j.at("phi").get<std::string>();
  } else {
    s.kind = kind == "fold-hopf" ? SystemKind::fold_hopf : SystemKind::double_hopf;
    if (kind != "fold-hopf" && kind != "double-hopf") throw std::invalid_argument("unknown kind '" + kind + "'");
    s.params = j.at("params").get<std::map<std::string, std::string>>();
    if (s.kind == SystemKind::double_hopf) s.chart = j.at("chart").get<int>();
  }
  return s;
}

json theorem_json(const TheoremClauseReport& r) {
  json clauses = json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"name", c.name}, {"holds", c.holds}, {"failed", c.failed}});
  return {{"family", to_string(r.family)},
          {"clauses", clauses},
          {"any_clause_holds", r.any_clause_holds},
          {"undecidable", r.undecidable}};
}

TheoremClauseReport theorem_from(const json& j) {
  TheoremClauseReport r;
  const std::string fam = j.at("family").get<std::string>();
  bool known = false;
  for (auto f : {ClauseFamily::fold_hopf, ClauseFamily::double_hopf_chart1, ClauseFamily::double_hopf_chart2}) {
    if (to_string(f) == fam) {
      r.family = f;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown clause family '" + fam + "'");
  for (const auto& c : j.at("clauses")) {
    r.clauses.push_back({c.at("name").get<std::string>(), c.at("holds").get<bool>(),
                         c.at("failed").get<std::vector<std::string>>()});
  }
  r.any_clause_holds = j.at("any_clause_holds").get<bool>();
  r.undecidable = j.at("undecidable").get<std::vector<std::string>>();
  return r;
}

}  // namespace

Status status_from_string(const std::string& s) {
  for (auto st : {Status::nonintegrable, Status::inconclusive, Status::inapplicable}) {
    if (to_string(st) == s) return st;
  }
  throw std::invalid_argument("unknown status '" + s + "'");
}

Criterion criterion_from_string(const std::string& s) {
  for (auto c : {Criterion::i, Criterion::ii, Criterion::iii, Criterion::iv, Criterion::v, Criterion::vi}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown criterion '" + s + "'");
}

int exit_code(Status s) {
  switch (s) {
    case Status::nonintegrable:
      return 0;
    case Status::inconclusive:
      return 1;
    case Status::inapplicable:
      return 3;
  }
  return kUsageErrorExit;
}

json to_json(const ReportDocument& doc) {
  const Certificate& c = doc.certificate;
  json kappas = json::array();
  for (const auto& k : c.kappas) kappas.push_back(print(k));
  json orders = json::array();
  for (const auto& o : c.orders) orders.push_back(order_json(o));
  json firing = nullptr;
  if (c.firing_order) firing = {{"k", *c.firing_order}, {"criterion", to_string(*c.firing_criterion)}};
  return {
      {"version", doc.version},
      {"status", to_string(c.status)},
      {"reason", c.reason},
      {"input_echo", input_json(doc.input)},
      {"system", {{"P", c.P}, {"Q", c.Q}, {"phi", c.phi}, {"d", c.field_d}}},
      {"max_order", c.max_order},
      {"kappas", kappas},
      {"omega", omega_json(c.omega)},
      {"h1", h1_json(c.h1)},
      {"orders", orders},
      {"zero_orders", c.zero_orders},
      {"firing", firing},
      {"trace", strings(c.trace)},
      {"theorem", opt_json(doc.theorem, theorem_json)},
      {"timing", {{"seconds", doc.seconds}}},
  };
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.version = j.at("version").get<std::string>();
    doc.input = input_from(j.at("input_echo"));
    Certificate& c = doc.certificate;
    c.status = status_from_string(j.at("status").get<std::string>());
    c.reason = j.at("reason").get<std::string>();
    const auto& sys = j.at("system");
    c.P = sys.at("P").get<std::string>();
    c.Q = sys.at("Q").get<std::string>();
    c.phi = sys.at("phi").get<std::string>();
    c.field_d = sys.at("d").get<std::int64_t>();
    const Decoder dec{FieldSpec(c.field_d)};
    c.max_order = j.at("max_order").get<int>();
    for (const auto& k : j.at("kappas")) c.kappas.push_back(dec.ratfunc(k));
    c.omega = omega_from(j.at("omega"), dec);
    c.h1 = h1_from(j.at("h1"), dec);
    for (const auto& o : j.at("orders")) c.orders.push_back(order_from(o, dec));
    c.zero_orders = j.at("zero_orders").get<std::vector<int>>();
    if (!j.at("firing").is_null()) {
      c.firing_order = j.at("firing").at("k").get<int>();
      c.firing_criterion = criterion_from_string(j.at("firing").at("criterion").get<std::string>());
    }
    c.trace = j.at("trace").get<std::vector<std::string>>();
    if (!j.at("theorem").is_null()) doc.theorem = theorem_from(j.at("theorem"));
    doc.seconds = j.at("timing").at("seconds").get<double>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string dump_report(const ReportDocument& doc, bool with_timing) {
  json j = to_json(doc);
  if (!with_timing) j.erase("timing");
  return j.dump(2);
}

}  // namespace nonint::cli
