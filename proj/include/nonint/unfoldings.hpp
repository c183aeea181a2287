#pragma once

// Reduced planar systems of the fold-Hopf and double-Hopf normal forms, and the
// parameter clauses under which they are known to be nonintegrable.

#include <string>
#include <vector>

#include "nonint/varcalc.hpp"

namespace nonint {

/// beta and omega only drive the dropped angle equation; they are recorded, not used.
struct FoldHopfParams {
  QuadExt mu, nu, alpha;
  int s = 1;
  QuadExt beta, omega;
  FieldSpec field;
};

/// omega1 and omega2 are inert for the same reason.
struct DoubleHopfParams {
  QuadExt mu, nu, alpha, beta;
  int s = 1;
  QuadExt omega1, omega2;
  FieldSpec field;
};

struct ReducedSystem {
  PlanarSystem system;
  CurveData curve;
};

/// xi = x3, eta = r: P = xi^2 + s eta^2 + mu, Q = eta (alpha xi + nu), curve eta = 0.
ReducedSystem fold_hopf_system(const FoldHopfParams& p);

/// Chart 1 (xi = r2, eta = r1): P = xi (beta eta^2 - xi^2 + mu), Q = eta (s eta^2 + alpha xi^2 + nu).
/// Chart 2 is chart 1 at the parameters returned by chart2_parameters.
ReducedSystem double_hopf_system(const DoubleHopfParams& p, int chart);

/// (mu, nu, alpha, beta, s) -> (nu, mu, -beta s, alpha, -1).
DoubleHopfParams chart2_parameters(const DoubleHopfParams& p);

/// Which invariant plane the clauses speak about.
enum class ClauseFamily {
  fold_hopf,          // near the x3-axis plane of the fold-Hopf normal form
  double_hopf_chart1, // near the (x1, x2)-plane
  double_hopf_chart2, // near the (x3, x4)-plane
};

std::string to_string(ClauseFamily f);

struct ClauseResult {
  std::string name;                 // "i", "ii", "iii"
  bool holds = false;
  std::vector<std::string> failed;  // sub-conditions that were false
};

struct TheoremClauseReport {
  ClauseFamily family;
  std::vector<ClauseResult> clauses;
  bool any_clause_holds = false;
  std::vector<std::string> undecidable;  // always empty over Q(sqrt d)
};

TheoremClauseReport theorem_conditions(const FoldHopfParams& p);
TheoremClauseReport theorem_conditions(const DoubleHopfParams& p, int chart);

/// True iff x is the square of a rational number.
bool is_rational_square(const QuadExt& x);

}  // namespace nonint
