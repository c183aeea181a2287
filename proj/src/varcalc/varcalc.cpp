#include "nonint/varcalc.hpp"

#include <cstdlib>
#include <string>

namespace nonint {
namespace {

// Coefficients of F(xi, phi + w) as a polynomial in w, up to w^K.
std::vector<RatFunc> expand_along_curve(const BiPoly& F, const RatFunc& phi, int K) {
  const auto rows = F.eta_coefficients();
  std::vector<RatFunc> phi_pow{RatFunc(1L)};
  for (std::size_t j = 1; j < rows.size(); ++j) phi_pow.push_back(phi_pow.back() * phi);
  std::vector<RatFunc> out(static_cast<std::size_t>(K) + 1);
  for (int m = 0; m <= K && m < static_cast<int>(rows.size()); ++m) {
    RatFunc acc;
    Integer binom(1);  // C(j, m)
    for (std::size_t j = static_cast<std::size_t>(m); j < rows.size(); ++j) {
      if (j > static_cast<std::size_t>(m)) {
        binom = binom * static_cast<unsigned long>(j) / static_cast<unsigned long>(j - m);
      }
      if (rows[j].is_zero()) continue;
      acc += RatFunc(rows[j] * QuadExt(Rational(binom))) * phi_pow[j - m];
    }
    out[m] = acc;
  }
  return out;
}

// Hermite reduction of A / p^m (p irreducible, m >= 2): returns the rational
// part of the antiderivative and leaves the remaining numerator over p in `A`.
RatFunc hermite_reduce(UPoly& A, const UPoly& p, int m) {
  const ExtendedGcd e = poly_xgcd(p, p.derivative());  // s p + t p' = 1
  RatFunc rational;
  for (int order = m; order >= 2; --order) {
    // A = S p + T p' with deg T < deg p.
    const DivRem tq = poly_divrem(A * e.t, p);
    const UPoly& T = tq.remainder;
    const UPoly S = exact_div(A - T * p.derivative(), p);
    const QuadExt inv_order = QuadExt(Rational(1, order - 1));
    rational -= RatFunc(T * inv_order, pow(p, static_cast<unsigned>(order - 1)));
    A = S + T.derivative() * inv_order;
  }
  return rational;
}

}  // namespace

bool verify_integral_curve(const PlanarSystem& sys, const CurveData& curve) {
  const RatFunc p_on = sys.P.substitute_eta(curve.phi);
  if (p_on.is_zero()) throw SingularCurveError("curve inside singular locus: P vanishes on it");
  const RatFunc q_on = sys.Q.substitute_eta(curve.phi);
  return (q_on - curve.phi.derivative() * p_on).is_zero();
}

VariationalData kappa_coefficients(const PlanarSystem& sys, const CurveData& curve, int max_order) {
  if (max_order < 1) throw std::invalid_argument("max order must be at least 1");
  const auto P = expand_along_curve(sys.P, curve.phi, max_order);
  const auto Q = expand_along_curve(sys.Q, curve.phi, max_order);
  if (P[0].is_zero()) throw SingularCurveError("curve inside singular locus: P vanishes on it");
  const RatFunc p0_inv = P[0].inverse();

  // R = Q/P = sum r_m w^m, from Q_m = sum_i P_i r_{m-i}.
  std::vector<RatFunc> r;
  r.reserve(static_cast<std::size_t>(max_order) + 1);
  for (int m = 0; m <= max_order; ++m) {
    RatFunc acc = Q[m];
    for (int i = 1; i <= m; ++i) {
      if (!P[i].is_zero() && !r[m - i].is_zero()) acc -= P[i] * r[m - i];
    }
    r.push_back(acc * p0_inv);
  }
  if (!(r[0] == curve.phi.derivative())) {
    throw std::invalid_argument("eta = phi(xi) is not an integral curve of the system");
  }

  VariationalData out;
  out.max_order = max_order;
  Integer factorial(1);
  for (int k = 1; k <= max_order; ++k) {
    factorial *= k;
    out.kappas.push_back(r[k] * RatFunc(QuadExt(Rational(factorial))));
  }
  return out;
}

OmegaData omega_decompose(const RatFunc& kappa1, FieldSpec field) {
  OmegaData out;
  out.regular_at_infinity = kappa1.den().degree() > kappa1.num().degree();
  const PartialFractions pf = partial_fractions(kappa1, field);
  out.exp_part = RatFunc(pf.poly_part.integral());

  // Group the terms of each class, reduce higher orders, keep the log part.
  std::size_t i = 0;
  while (i < pf.terms.size()) {
    const FactorClass& cls = pf.terms[i].cls;
    const UPoly& p = cls.factor;
    std::size_t j = i;
    UPoly log_num;
    while (j < pf.terms.size() && pf.terms[j].cls.factor == p) {
      const auto& t = pf.terms[j];
      if (t.order == 1) {
        log_num += t.numerator;
      } else {
        UPoly A = t.numerator;
        out.exp_part += hermite_reduce(A, p, t.order);
        log_num += A;
      }
      ++j;
    }
    const DivRem split = poly_divrem(log_num, p);
    if (!split.quotient.is_zero()) out.exp_part += RatFunc(split.quotient.integral());
    if (!split.remainder.is_zero()) {
      out.residues.push_back({cls, eval_mod(split.remainder * inverse_mod(p.derivative(), p), p)});
    }
    i = j;
  }
  return out;
}

RatFunc omega_log_derivative(const OmegaData& om) {
  RatFunc r = om.exp_part.derivative();
  for (const auto& e : om.residues) {
    const UPoly& p = e.cls.factor;
    r += RatFunc(eval_mod(e.residue * p.derivative(), p), p);
  }
  return r;
}

int max_order_from_env() {
  const char* v = std::getenv("NONINT_MAX_ORDER");
  if (v == nullptr || *v == '\0') return kDefaultMaxOrder;
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(v, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("NONINT_MAX_ORDER is not an integer");
  }
  if (used != std::string(v).size() || k < 1 || k > kMaxOrderCap) {
    throw std::invalid_argument("NONINT_MAX_ORDER must be an integer in [1, 25]");
  }
  return k;
}

}  // namespace nonint
