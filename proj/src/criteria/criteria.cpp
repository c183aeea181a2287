#include "nonint/criteria.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonint {
namespace {

bool coprime(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.degree() == Degree(0);
  if (b.is_zero()) return a.degree() == Degree(0);
  return poly_gcd(a, b).degree() == Degree(0);
}

std::vector<UPoly> shared_factors(const RootPartition& part) {
  std::vector<UPoly> v;
  for (const auto& c : part.shared) v.push_back(c.factor);
  return v;
}

std::vector<UPoly> new_factors(const RootPartition& part) {
  std::vector<UPoly> v;
  for (const auto& c : part.fresh) v.push_back(c.factor);
  return v;
}

std::vector<FactorClass> factor_or_empty(const UPoly& p, FieldSpec field) {
  if (p.degree() <= Degree(0)) return {};
  return factor_irreducible(p, field);
}

QuadExt from_int(long v) { return QuadExt(v); }

// Reduced row echelon form of [M | b] over Q(sqrt d). Returns false if inconsistent.
// On success, `pivot_col[r]` is the pivot column of row r.
bool row_reduce(std::vector<std::vector<QuadExt>>& M, std::vector<QuadExt>& b, std::vector<int>& pivot_col) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  std::size_t r = 0;
  pivot_col.clear();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    std::swap(b[piv], b[r]);
    const QuadExt inv = M[r][c].inverse();
    for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c].is_zero()) continue;
      const QuadExt f = M[i][c];
      for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(H1Reason r) {
  switch (r) {
    case H1Reason::nonzero_exp_part:
      return "nonzero-exp-part";
    case H1Reason::irrational_residue:
      return "irrational-residue";
    case H1Reason::all_residues_rational:
      return "all-residues-rational";
  }
  return "unknown";
}

H1Verdict check_H1(const OmegaData& om) {
  H1Verdict v;
  if (!om.exp_part.is_zero()) {
    v.holds = true;
    v.reason = H1Reason::nonzero_exp_part;
    v.exp_part = om.exp_part;
    return v;
  }
  for (const auto& r : om.residues) {
    // A non-constant class element takes conjugate values, none of them rational.
    if (!r.is_constant() || !r.residue.coeff(0).is_rational()) {
      v.holds = true;
      v.reason = H1Reason::irrational_residue;
      v.residue = r;
      return v;
    }
  }
  v.holds = false;
  v.reason = H1Reason::all_residues_rational;
  v.rational_residues = om.residues;
  return v;
}

// ---------------------------------------------------------------------------

RootPartition partition_roots(const RatFunc& kappa1, const RatFunc& kappak, FieldSpec field) {
  if (kappak.is_zero()) throw std::invalid_argument("kappa_k vanishes: skip order k");
  field = coefficient_field(kappa1.den(), coefficient_field(kappak.den(), field));
  const auto f1 = factor_or_empty(kappa1.den(), field);
  const auto fk = factor_or_empty(kappak.den(), field);

  RootPartition part;
  auto mult_in = [](const std::vector<FactorClass>& v, const UPoly& p) {
    for (const auto& c : v) {
      if (c.factor == p) return c.multiplicity;
    }
    return 0;
  };
  for (const auto& c : f1) {
    const int diff = mult_in(fk, c.factor) - c.multiplicity;
    if (diff == 0) continue;
    part.shared.push_back({c.factor, c.multiplicity, diff});
    part.n1 += c.factor.degree().value();
    part.rad1 *= c.factor;
  }
  for (const auto& c : fk) {
    if (mult_in(f1, c.factor) != 0) continue;
    part.fresh.push_back({c.factor, c.multiplicity});
    part.nk += c.factor.degree().value();
    part.radk *= c.factor;
  }
  return part;
}

RatFunc partition_denominator(const RatFunc& kappa1, const RootPartition& part) {
  RatFunc d(kappa1.den());
  for (const auto& c : part.shared) {
    const RatFunc pc(c.factor);
    d *= c.a1 >= 0 ? pow(pc, static_cast<unsigned>(c.a1)) : pow(pc.inverse(), static_cast<unsigned>(-c.a1));
  }
  for (const auto& c : part.fresh) d *= RatFunc(pow(c.factor, static_cast<unsigned>(c.ak)));
  return d;
}

// ---------------------------------------------------------------------------

UPoly class_derivative_expansion(const std::vector<UPoly>& factors, std::size_t c) {
  UPoly r = factors.at(c).derivative();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i != c) r *= factors[i];
  }
  return r;
}

UPoly kappa_bar(const RatFunc& kappa1, const RootPartition& part, int k, const std::vector<int>& b) {
  if (b.size() != part.shared.size()) throw std::invalid_argument("one b value per shared class required");
  const auto fs = shared_factors(part);
  UPoly sum;
  for (std::size_t c = 0; c < fs.size(); ++c) {
    sum += class_derivative_expansion(fs, c) * from_int(part.shared[c].a1 + b[c] - 1);
  }
  return kappa1.num() * part.rad1 * from_int(k - 1) - kappa1.den() * sum;
}

SimplicityProfile simplicity_profile(const RatFunc& kappa1, const RootPartition& part, int k) {
  SimplicityProfile prof;
  const UPoly d1 = kappa1.den().derivative();
  for (const auto& sc : part.shared) {
    ClassSimplicity cs;
    const UPoly& p = sc.factor;
    if (!eval_mod(d1, p).is_zero()) {
      const UPoly c = eval_mod(kappa1.num() * from_int(k - 1) * inverse_mod(d1, p), p);
      if (c.is_constant()) cs.bad_b = c.coeff(0) - from_int(sc.a1) + from_int(1);
    }
    if (cs.bad_b) {
      cs.simple_at_b1 = !cs.bad_b->is_one();
      cs.simple_for_all_b = !cs.bad_b->is_natural();
      cs.simple_whenever_bj_gt_1 = !(cs.bad_b->is_natural() && !cs.bad_b->is_one());
    }
    prof.all_simple_whenever_bj_gt_1 = prof.all_simple_whenever_bj_gt_1 && cs.simple_whenever_bj_gt_1;
    prof.classes.push_back(std::move(cs));
  }
  return prof;
}

UPoly build_rho(const RatFunc& kappa1, const RootPartition& part, int k) {
  const UPoly& k1n = kappa1.num();
  const UPoly& k1d = kappa1.den();
  UPoly rho = k1n * part.radk * from_int(k - 1);

  const auto fk = new_factors(part);
  UPoly new_sum;
  for (std::size_t c = 0; c < fk.size(); ++c) {
    new_sum += class_derivative_expansion(fk, c) * from_int(part.fresh[c].ak - 1);
  }
  rho -= k1d * new_sum;

  const auto f1 = shared_factors(part);
  UPoly shared_sum;
  for (std::size_t c = 0; c < f1.size(); ++c) {
    shared_sum += class_derivative_expansion(f1, c) * from_int(part.shared[c].a1);
  }
  if (!shared_sum.is_zero()) {
    const DivRem q = poly_divrem(k1d * part.radk, part.rad1);
    if (!q.remainder.is_zero()) throw std::logic_error("root partition inconsistent: rad1 does not divide kappa_1d");
    rho -= q.quotient * shared_sum;
  }
  return rho;
}

RhoDivision divide_by_rho(const UPoly& kappakn, const UPoly& rho) {
  if (rho.is_zero()) throw std::domain_error("rho_k vanishes identically");
  const DivRem qr = poly_divrem(kappakn, rho);
  RhoDivision out{qr.quotient, qr.remainder, 0};
  if (qr.quotient.degree() > Degree(0)) out.n_bar = distinct_root_count(qr.quotient);
  return out;
}

// ---------------------------------------------------------------------------

int solution_degree_bound(const UPoly& A, const UPoly& rho, const UPoly& rhs) {
  if (A.is_zero()) throw std::invalid_argument("A must be nonzero");
  const int a = A.degree().value();
  const Degree shift = std::max(Degree(a - 1), rho.degree());
  int bound = 0;
  if (!rhs.is_zero()) bound = std::max(bound, rhs.degree().value() - shift.value());
  if (!rho.is_zero() && rho.degree() == Degree(a - 1)) {
    const QuadExt special = -(rho.leading() / A.leading());
    if (special.in_Z_geq0()) {
      const Rational& v = special.rational_part();
      if (v.get_num() < 100000) bound = std::max(bound, static_cast<int>(v.get_num().get_si()));
    }
  }
  return bound;
}

PolynomialSolutions solve_polynomial_ode(const UPoly& A, const UPoly& rho, const UPoly& rhs, int degree_bound) {
  if (A.is_zero()) throw std::invalid_argument("A must be nonzero");
  PolynomialSolutions out;
  out.degree_bound = degree_bound;
  const int n = degree_bound + 1;
  std::vector<UPoly> columns;  // L(x^j) = A j x^(j-1) + rho x^j
  int rows = rhs.is_zero() ? 0 : rhs.degree().value() + 1;
  for (int j = 0; j < n; ++j) {
    UPoly col = rho * UPoly::monomial(QuadExt(1L), static_cast<unsigned>(j));
    if (j > 0) col += A * UPoly::monomial(from_int(j), static_cast<unsigned>(j - 1));
    if (!col.is_zero()) rows = std::max(rows, col.degree().value() + 1);
    columns.push_back(std::move(col));
  }
  std::vector<std::vector<QuadExt>> M(static_cast<std::size_t>(rows), std::vector<QuadExt>(n));
  std::vector<QuadExt> b(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = columns[j].coeff(static_cast<std::size_t>(i));
    b[i] = rhs.coeff(static_cast<std::size_t>(i));
  }
  std::vector<int> pivots;
  if (!row_reduce(M, b, pivots)) return out;
  out.exists = true;

  std::vector<QuadExt> z(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = b[r];
  out.particular = UPoly(z);

  // Kernel: one vector per free column; a first-order equation has at most one.
  for (int f = 0; f < n; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<QuadExt> h(n);
    h[f] = QuadExt(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = -M[r][f];
    out.homogeneous = UPoly(h);
    break;
  }
  return out;
}

std::optional<UPoly> polynomial_solution(const UPoly& A, const UPoly& rho, const UPoly& rhs) {
  const auto sol = solve_polynomial_ode(A, rho, rhs, solution_degree_bound(A, rho, rhs));
  if (!sol.exists) return std::nullopt;
  return sol.particular;
}

// ---------------------------------------------------------------------------

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::i:
      return "i";
    case Criterion::ii:
      return "ii";
    case Criterion::iii:
      return "iii";
    case Criterion::iv:
      return "iv";
    case Criterion::v:
      return "v";
    case Criterion::vi:
      return "vi";
  }
  return "?";
}

namespace {

// A member z of the solution family coprime to R, if one exists.
std::optional<UPoly> coprime_member(const PolynomialSolutions& sol, const UPoly& R) {
  if (!sol.exists) return std::nullopt;
  if (sol.homogeneous.is_zero()) {
    if (!sol.particular.is_zero() && coprime(sol.particular, R)) return sol.particular;
    return std::nullopt;
  }
  // z_p + c z_h: each factor of R excludes at most one c unless it divides both.
  const int tries = (R.is_zero() ? 0 : R.degree().value()) + 2;
  for (int c = 0; c <= tries; ++c) {
    const UPoly z = sol.particular + sol.homogeneous * from_int(c);
    if (!z.is_zero() && coprime(z, R)) return z;
  }
  return std::nullopt;
}

H2FailureWitness make_witness(int k, const RatFunc& kappa1, const RootPartition& part, const UPoly& z) {
  H2FailureWitness w;
  w.k = k;
  w.solution = z;
  RatFunc logd = kappa1 * RatFunc(from_int(k - 1));
  RatFunc denom(1L);
  for (const auto& c : part.shared) {
    logd -= RatFunc(c.factor.derivative() * from_int(c.a1), c.factor);
    const RatFunc pc(c.factor);
    denom *= c.a1 >= 0 ? pow(pc, static_cast<unsigned>(c.a1)) : pow(pc.inverse(), static_cast<unsigned>(-c.a1));
  }
  for (const auto& c : part.fresh) {
    logd -= RatFunc(c.factor.derivative() * from_int(c.ak - 1), c.factor);
    denom *= RatFunc(pow(c.factor, static_cast<unsigned>(c.ak - 1)));
  }
  logd += RatFunc(z.derivative(), z);
  w.theta_log_derivative = logd;
  w.theta_ratio = RatFunc(z) / denom;
  return w;
}

struct ScanInternals {
  UPoly A;
  UPoly R;
  PolynomialSolutions solutions;
};

}  // namespace

std::optional<H2FailureWitness> h2_failure_witness(int k, const RatFunc& kappa1, const RatFunc& kappak,
                                                   const RootPartition& part, const SimplicityProfile& prof) {
  if (kappa1.num().is_zero() || kappak.num().is_zero()) return std::nullopt;
  if (!coprime(kappak.num(), part.rad1)) return std::nullopt;
  for (const auto& c : part.fresh) {
    if (c.ak < 2) return std::nullopt;
  }
  if (!prof.all_simple_whenever_bj_gt_1) return std::nullopt;
  const UPoly A = kappa1.den() * part.radk;
  const UPoly rho = build_rho(kappa1, part, k);
  const UPoly& rhs = kappak.num();
  const auto sol = solve_polynomial_ode(A, rho, rhs, solution_degree_bound(A, rho, rhs));
  const auto z = coprime_member(sol, part.rad1 * part.radk);
  if (!z) return std::nullopt;
  return make_witness(k, kappa1, part, *z);
}

CriterionOutcome criterion_scan(int k, const RatFunc& kappa1, const RatFunc& kappak, const RootPartition& part,
                                const SimplicityProfile& prof) {
  CriterionOutcome out;
  out.k = k;
  out.partition = part;
  out.profile = prof;
  out.simple_whenever_bj_gt_1 = prof.all_simple_whenever_bj_gt_1;

  const UPoly& k1n = kappa1.num();
  const UPoly& k1d = kappa1.den();
  const UPoly& kkn = kappak.num();
  if (k1n.is_zero()) out.precondition_failures.push_back("kappa_1 numerator vanishes identically");
  if (kkn.is_zero()) out.precondition_failures.push_back("kappa_k numerator vanishes identically");
  if (!kkn.is_zero() && !coprime(kkn, part.rad1)) {
    out.precondition_failures.push_back("kappa_kn vanishes at a root of a shared class");
  }
  if (!out.precondition_failures.empty()) return out;

  OrderDiagnostics& dg = out.diagnostics;
  dg.deg_kappa1d = k1d.degree();
  dg.deg_kappakn = kkn.degree();
  dg.rho = build_rho(kappa1, part, k);
  dg.deg_rho = dg.rho.degree();
  dg.rho_degenerate = dg.rho.is_zero();
  if (!dg.rho_degenerate) {
    dg.rho0 = dg.rho.leading();
    const RhoDivision div = divide_by_rho(kkn, dg.rho);
    dg.rho_bar = div.rho_bar;
    dg.rho_tilde = div.rho_tilde;
    dg.n_bar = div.n_bar;
    dg.deg_rho_bar = div.rho_bar.degree();
  }

  const UPoly A = k1d * part.radk;
  const UPoly R = part.rad1 * part.radk;
  dg.solution_degree_bound = solution_degree_bound(A, dg.rho, kkn);
  const PolynomialSolutions sol = solve_polynomial_ode(A, dg.rho, kkn, dg.solution_degree_bound);
  dg.solution_exists = sol.exists;

  std::vector<Criterion> holding;
  bool has_ak1 = false;
  for (const auto& c : part.fresh) has_ak1 = has_ak1 || c.ak == 1;
  if (has_ak1) holding.push_back(Criterion::i);

  bool some_bad_at_one = false;
  for (const auto& c : prof.classes) some_bad_at_one = some_bad_at_one || (c.bad_b && c.bad_b->is_one());
  if (part.n1 > 0 && prof.all_simple_whenever_bj_gt_1 && some_bad_at_one) holding.push_back(Criterion::ii);

  if (!prof.all_simple_whenever_bj_gt_1) {
    out.notes.push_back("a shared root is a multiple zero of kbar_{k,b} for some b_j > 1; criteria iii-vi skipped");
  } else {
    const int lhs = dg.deg_kappa1d.value() + part.nk;
    if (dg.rho_degenerate) {
      out.notes.push_back("rho_k vanishes identically; criteria iv-vi skipped");
    } else {
      const int drho = dg.deg_rho.value();
      const bool rho_bar_zero = dg.rho_bar.is_zero();
      if (dg.n_bar == 0) {
        const bool iva = rho_bar_zero || !dg.rho_tilde.is_zero();
        const bool ivb = lhs != drho + 1 || !(-*dg.rho0).is_natural();
        if (iva && ivb) holding.push_back(Criterion::iv);
      } else {
        const int dkn = dg.deg_kappakn.value();
        if (lhs > std::max(dkn, drho + 1)) holding.push_back(Criterion::v);
        const int drb = dg.deg_rho_bar.value();
        if (lhs < drho - drb + 1) {
          const bool via = !coprime(dg.rho_bar, R);
          const bool vib = !(dg.rho_tilde == k1d * dg.rho_bar.derivative() * part.radk);
          if (via || vib) holding.push_back(Criterion::vi);
        }
      }
    }
    if (!coprime_member(sol, R)) holding.push_back(Criterion::iii);
  }
  out.holding = holding;

  if (sol.exists) {
    // Any polynomial solution z makes theta_k / Omega^(k-1) rational at this order.
    if (!holding.empty()) {
      out.notes.push_back("a polynomial solution exists although a criterion predicate holds; not certified");
    }
    out.h2_failure = h2_failure_witness(k, kappa1, kappak, part, prof);
    if (!out.h2_failure) {
      out.notes.push_back("polynomial solution exists, so theta_k / Omega^(k-1) is rational at this order");
    }
    return out;
  }
  if (!holding.empty()) out.fired = holding.front();
  return out;
}

bool criterion_predicate(Criterion c, int k, const RatFunc& kappa1, const RatFunc& kappak, FieldSpec field) {
  const RootPartition part = partition_roots(kappa1, kappak, field);
  const SimplicityProfile prof = simplicity_profile(kappa1, part, k);
  const CriterionOutcome out = criterion_scan(k, kappa1, kappak, part, prof);
  return std::find(out.holding.begin(), out.holding.end(), c) != out.holding.end();
}

// ---------------------------------------------------------------------------

std::string to_string(Status s) {
  switch (s) {
    case Status::nonintegrable:
      return "nonintegrable";
    case Status::inconclusive:
      return "inconclusive";
    case Status::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

Certificate certify(const PlanarSystem& sys, const CurveData& curve, int max_order) {
  if (max_order < 2 || max_order > kMaxOrderCap) throw std::invalid_argument("max order must lie in [2, 25]");
  if (!verify_integral_curve(sys, curve)) {
    throw std::invalid_argument("eta = phi(xi) is not an integral curve of the system");
  }
  Certificate cert;
  cert.P = sys.P.to_string();
  cert.Q = sys.Q.to_string();
  cert.phi = curve.phi.to_string();
  cert.field_d = sys.field.d();
  cert.max_order = max_order;

  const VariationalData vd = kappa_coefficients(sys, curve, max_order);
  cert.kappas = vd.kappas;
  const RatFunc& kappa1 = vd.kappa(1);
  cert.omega = omega_decompose(kappa1, sys.field);
  cert.trace.push_back("kappa_1 = " + kappa1.to_string());

  if (!cert.omega.regular_at_infinity) {
    cert.status = Status::inapplicable;
    cert.reason = "irregular singularity at infinity: deg kappa_1d <= deg kappa_1n";
    cert.trace.push_back(cert.reason);
    return cert;
  }
  cert.h1 = check_H1(cert.omega);
  if (!cert.h1.holds) {
    cert.status = Status::inconclusive;
    cert.reason = "H1 fails: exponential part vanishes and every residue is rational";
    cert.trace.push_back(cert.reason);
    return cert;
  }
  cert.trace.push_back("H1 holds: " + to_string(cert.h1.reason));

  for (int k = 2; k <= max_order; ++k) {
    const RatFunc& kappak = vd.kappa(k);
    if (kappak.is_zero()) {
      cert.zero_orders.push_back(k);
      continue;
    }
    const RootPartition part = partition_roots(kappa1, kappak, sys.field);
    const SimplicityProfile prof = simplicity_profile(kappa1, part, k);
    CriterionOutcome out = criterion_scan(k, kappa1, kappak, part, prof);
    std::string line = "k=" + std::to_string(k) + ": ";
    if (out.fired) {
      line += "criterion " + to_string(*out.fired) + " holds";
    } else if (!out.precondition_failures.empty()) {
      line += "precondition fails (" + out.precondition_failures.front() + ")";
    } else if (out.h2_failure) {
      line += "H2 fails (polynomial solution " + out.h2_failure->solution.to_string() + ")";
    } else {
      line += "undetermined";
    }
    cert.trace.push_back(line);
    const bool fired = out.fired.has_value();
    if (fired) {
      cert.firing_order = k;
      cert.firing_criterion = out.fired;
    }
    cert.orders.push_back(std::move(out));
    if (fired) {
      cert.status = Status::nonintegrable;
      cert.reason = "H1 holds and criterion " + to_string(*cert.firing_criterion) + " proves H2 at order " +
                    std::to_string(k);
      return cert;
    }
  }
  cert.status = Status::inconclusive;
  cert.reason = "no criterion holds for any order up to " + std::to_string(max_order);
  return cert;
}

}  // namespace nonint
