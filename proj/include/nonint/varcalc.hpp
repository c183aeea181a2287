#pragma once

// Variational coefficients of a planar polynomial field along a rational
// invariant curve, and the decomposition of Omega = exp(integral kappa_1).

#include <stdexcept>
#include <string>
#include <vector>

#include "nonint/bipoly.hpp"
#include "nonint/factor.hpp"

namespace nonint {

inline constexpr int kDefaultMaxOrder = 9;
inline constexpr int kMaxOrderCap = 25;

/// xi' = P(xi, eta), eta' = Q(xi, eta); foliation deta/dxi = Q/P.
struct PlanarSystem {
  BiPoly P;
  BiPoly Q;
  FieldSpec field;
  std::string label;
};

/// The invariant curve eta = phi(xi).
struct CurveData {
  RatFunc phi;
};

/// Raised when P vanishes identically along the curve.
class SingularCurveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct VariationalData {
  std::vector<RatFunc> kappas;  // kappas[k-1] = kappa_k
  int max_order = 0;

  const RatFunc& kappa(int k) const { return kappas.at(static_cast<std::size_t>(k - 1)); }
};

/// One conjugate class of simple poles of the logarithmic part of kappa_1.
/// The residue is an element of K[xi]/(factor): its value at each root of the
/// factor is the residue of kappa_1 there.
struct ResidueEntry {
  FactorClass cls;
  UPoly residue;

  bool is_constant() const { return residue.is_constant(); }
};

struct OmegaData {
  RatFunc exp_part;  // E, with E(infinity) finite and zero polynomial constant term
  std::vector<ResidueEntry> residues;
  bool regular_at_infinity = false;
};

/// Q(xi, phi) - phi' P(xi, phi) == 0. Throws SingularCurveError if P(xi, phi) == 0.
bool verify_integral_curve(const PlanarSystem& sys, const CurveData& curve);

/// kappa_1..kappa_K with kappa_k = k! [w^k] R(xi, phi(xi) + w), R = Q/P.
/// Throws SingularCurveError, or std::invalid_argument if the curve is not invariant
/// or K < 1.
VariationalData kappa_coefficients(const PlanarSystem& sys, const CurveData& curve, int max_order);

/// kappa_1 = E' + sum_c residue_c * p_c' / p_c (the residue term taken mod p_c).
OmegaData omega_decompose(const RatFunc& kappa1, FieldSpec field = FieldSpec());

/// Rebuilds kappa_1 from the decomposition; used to verify it.
RatFunc omega_log_derivative(const OmegaData& om);

/// Max order from the NONINT_MAX_ORDER environment variable, else the default.
/// Values outside [1, kMaxOrderCap] are rejected with std::invalid_argument.
int max_order_from_env();

}  // namespace nonint
