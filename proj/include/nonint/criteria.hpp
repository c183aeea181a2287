#pragma once

// Transcendence of Omega (H1), sufficient criteria for theta_k / Omega^(k-1)
// to be irrational (H2), and the certificate driver.

#include <optional>
#include <string>
#include <vector>

#include "nonint/varcalc.hpp"

namespace nonint {

// ---------------------------------------------------------------------------
// H1

enum class H1Reason { nonzero_exp_part, irrational_residue, all_residues_rational };
std::string to_string(H1Reason r);

struct H1Verdict {
  bool holds = false;
  H1Reason reason = H1Reason::all_residues_rational;
  RatFunc exp_part;                            // set when reason == nonzero_exp_part
  std::optional<ResidueEntry> residue;         // set when reason == irrational_residue
  std::vector<ResidueEntry> rational_residues; // all residues, when H1 fails
};

/// Omega is transcendental iff E != 0 or some residue is not rational.
H1Verdict check_H1(const OmegaData& om);

// ---------------------------------------------------------------------------
// Root partition of kappa_kd against kappa_1d

struct SharedClass {
  UPoly factor;
  int b1 = 0;  // multiplicity in kappa_1d
  int a1 = 0;  // exponent in kappa_kd / kappa_1d, nonzero, >= -b1
};

struct NewClass {
  UPoly factor;
  int ak = 0;  // exponent in kappa_kd, positive; factor does not divide kappa_1d
};

struct RootPartition {
  std::vector<SharedClass> shared;
  std::vector<NewClass> fresh;
  int n1 = 0;  // number of roots over the shared classes
  int nk = 0;  // number of roots over the new classes
  UPoly rad1{1L};
  UPoly radk{1L};
};

/// Throws std::invalid_argument if kappa_k is zero.
RootPartition partition_roots(const RatFunc& kappa1, const RatFunc& kappak, FieldSpec field = FieldSpec());

/// kappa_1d * prod shared p^a1 * prod new p^ak (the a1 may be negative).
RatFunc partition_denominator(const RatFunc& kappa1, const RootPartition& part);

// ---------------------------------------------------------------------------
// Simplicity of the shared roots for the auxiliary polynomials kbar_{k,b}

struct ClassSimplicity {
  std::optional<QuadExt> bad_b;  // the single b_j making the root a multiple zero, if any
  bool simple_at_b1 = true;
  bool simple_for_all_b = true;
  bool simple_whenever_bj_gt_1 = true;
};

struct SimplicityProfile {
  std::vector<ClassSimplicity> classes;  // parallel to RootPartition::shared
  bool all_simple_whenever_bj_gt_1 = true;
};

SimplicityProfile simplicity_profile(const RatFunc& kappa1, const RootPartition& part, int k);

/// kbar_{k,b} in class form with one b value per shared class.
UPoly kappa_bar(const RatFunc& kappa1, const RootPartition& part, int k, const std::vector<int>& b);

// ---------------------------------------------------------------------------
// rho_k and the polynomial-solution equation A z' + rho z = kappa_kn

/// sum over the roots of `factors[c]` of prod_{other roots} (xi - root), for class c,
/// i.e. p_c' * prod_{c' != c} p_c'.
UPoly class_derivative_expansion(const std::vector<UPoly>& factors, std::size_t c);

UPoly build_rho(const RatFunc& kappa1, const RootPartition& part, int k);

struct RhoDivision {
  UPoly rho_bar;
  UPoly rho_tilde;
  int n_bar = 0;
};

/// kappa_kn = rho_bar * rho + rho_tilde. Throws std::domain_error when rho is zero.
RhoDivision divide_by_rho(const UPoly& kappakn, const UPoly& rho);

struct PolynomialSolutions {
  bool exists = false;
  UPoly particular;   // valid when exists
  UPoly homogeneous;  // nonzero iff A z' + rho z = 0 has a nonzero polynomial solution of bounded degree
  int degree_bound = 0;
};

/// Largest degree a polynomial solution of A z' + rho z = rhs can have (>= 0).
int solution_degree_bound(const UPoly& A, const UPoly& rho, const UPoly& rhs);

/// All polynomial solutions of degree <= degree_bound, by an exact linear solve.
PolynomialSolutions solve_polynomial_ode(const UPoly& A, const UPoly& rho, const UPoly& rhs, int degree_bound);

/// Some polynomial solution, if any exists. Requires A != 0.
std::optional<UPoly> polynomial_solution(const UPoly& A, const UPoly& rho, const UPoly& rhs);

// ---------------------------------------------------------------------------
// Criteria battery at one order

enum class Criterion { i, ii, iii, iv, v, vi };
std::string to_string(Criterion c);

struct H2FailureWitness {
  int k = 0;
  UPoly solution;             // z, coprime to rad1 * radk
  RatFunc theta_log_derivative;
  RatFunc theta_ratio;        // theta_k / Omega^(k-1), a rational function
};

struct OrderDiagnostics {
  Degree deg_kappa1d = Degree::neg_inf();
  Degree deg_kappakn = Degree::neg_inf();
  Degree deg_rho = Degree::neg_inf();
  Degree deg_rho_bar = Degree::neg_inf();
  UPoly rho;
  std::optional<QuadExt> rho0;  // leading coefficient of rho
  UPoly rho_bar;
  UPoly rho_tilde;
  int n_bar = 0;
  bool rho_degenerate = false;
  bool solution_exists = false;
  int solution_degree_bound = 0;
};

struct CriterionOutcome {
  int k = 0;
  std::optional<Criterion> fired;
  std::vector<Criterion> holding;  // every criterion whose predicate is true
  std::vector<std::string> precondition_failures;
  bool simple_whenever_bj_gt_1 = true;
  std::optional<H2FailureWitness> h2_failure;
  RootPartition partition;
  SimplicityProfile profile;
  OrderDiagnostics diagnostics;
  std::vector<std::string> notes;
};

/// Evaluates every criterion in the order i, ii, iv, v, vi, iii and records the
/// first that holds. A criterion is never reported as fired when a polynomial
/// solution exists (that solution proves theta_k / Omega^(k-1) rational).
CriterionOutcome criterion_scan(int k, const RatFunc& kappa1, const RatFunc& kappak, const RootPartition& part,
                                const SimplicityProfile& prof);

/// Recomputes everything from kappa_1 and kappa_k and evaluates one criterion.
bool criterion_predicate(Criterion c, int k, const RatFunc& kappa1, const RatFunc& kappak,
                         FieldSpec field = FieldSpec());

std::optional<H2FailureWitness> h2_failure_witness(int k, const RatFunc& kappa1, const RatFunc& kappak,
                                                   const RootPartition& part, const SimplicityProfile& prof);

// ---------------------------------------------------------------------------
// Certificate

enum class Status { nonintegrable, inconclusive, inapplicable };
std::string to_string(Status s);

struct Certificate {
  Status status = Status::inconclusive;
  std::string reason;
  std::string P, Q, phi;  // echo in the input grammar
  std::int64_t field_d = 1;
  int max_order = 0;
  std::vector<RatFunc> kappas;
  OmegaData omega;
  H1Verdict h1;
  std::vector<CriterionOutcome> orders;  // scanned orders with nonzero kappa_k
  std::vector<int> zero_orders;          // orders with kappa_k == 0
  std::optional<int> firing_order;
  std::optional<Criterion> firing_criterion;
  std::vector<std::string> trace;
};

/// Throws std::invalid_argument if the curve is not invariant, SingularCurveError
/// if it lies in the zero set of P.
Certificate certify(const PlanarSystem& sys, const CurveData& curve, int max_order);

}  // namespace nonint
