#include "nonint/unfoldings.hpp"

#include <stdexcept>

namespace nonint {
namespace {

void check_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("s must be +1 or -1");
}

FieldSpec params_field(FieldSpec declared, std::initializer_list<QuadExt> values) {
  FieldSpec f = declared;
  for (const auto& v : values) {
    if (v.is_rational()) continue;
    if (!f.is_rational_field() && !(f == v.field())) {
      throw std::invalid_argument("parameters from different quadratic fields");
    }
    f = v.field();
  }
  return f;
}

// Collects named sub-conditions of one clause.
class Clause {
 public:
  explicit Clause(std::string name) { r_.name = std::move(name); }
  Clause& require(bool ok, const std::string& what) {
    if (!ok) r_.failed.push_back(what);
    return *this;
  }
  ClauseResult done() {
    r_.holds = r_.failed.empty();
    return r_;
  }

 private:
  ClauseResult r_;
};

TheoremClauseReport finish(ClauseFamily family, std::vector<ClauseResult> clauses) {
  TheoremClauseReport rep{family, std::move(clauses), false, {}};
  for (const auto& c : rep.clauses) rep.any_clause_holds = rep.any_clause_holds || c.holds;
  return rep;
}

bool nonzero(const QuadExt& x) { return !x.is_zero(); }

}  // namespace

bool is_rational_square(const QuadExt& x) {
  if (!x.is_rational()) return false;
  const Rational& r = x.rational_part();
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

ReducedSystem fold_hopf_system(const FoldHopfParams& p) {
  check_sign(p.s);
  const BiPoly xi = BiPoly::xi(), eta = BiPoly::eta();
  ReducedSystem out;
  out.system.P = xi * xi + eta * eta * QuadExt(static_cast<long>(p.s)) + BiPoly(p.mu);
  out.system.Q = eta * (xi * p.alpha + BiPoly(p.nu));
  out.system.field = params_field(p.field, {p.mu, p.nu, p.alpha});
  out.system.label = "fold-hopf";
  out.curve.phi = RatFunc();
  return out;
}

DoubleHopfParams chart2_parameters(const DoubleHopfParams& p) {
  check_sign(p.s);
  DoubleHopfParams r = p;
  r.mu = p.nu;
  r.nu = p.mu;
  r.alpha = -(p.beta * QuadExt(static_cast<long>(p.s)));
  r.beta = p.alpha;
  r.s = -1;
  return r;
}

ReducedSystem double_hopf_system(const DoubleHopfParams& p, int chart) {
  if (chart == 2) {
    ReducedSystem out = double_hopf_system(chart2_parameters(p), 1);
    out.system.label = "double-hopf chart 2";
    return out;
  }
  if (chart != 1) throw std::invalid_argument("chart must be 1 or 2");
  check_sign(p.s);
  const BiPoly xi = BiPoly::xi(), eta = BiPoly::eta();
  ReducedSystem out;
  out.system.P = xi * (eta * eta * p.beta - xi * xi + BiPoly(p.mu));
  out.system.Q = eta * (eta * eta * QuadExt(static_cast<long>(p.s)) + xi * xi * p.alpha + BiPoly(p.nu));
  out.system.field = params_field(p.field, {p.mu, p.nu, p.alpha, p.beta});
  out.system.label = "double-hopf chart 1";
  out.curve.phi = RatFunc();
  return out;
}

std::string to_string(ClauseFamily f) {
  switch (f) {
    case ClauseFamily::fold_hopf:
      return "fold-hopf";
    case ClauseFamily::double_hopf_chart1:
      return "double-hopf-chart1";
    case ClauseFamily::double_hopf_chart2:
      return "double-hopf-chart2";
  }
  return "unknown";
}

TheoremClauseReport theorem_conditions(const FoldHopfParams& p) {
  const QuadExt& mu = p.mu;
  const QuadExt& nu = p.nu;
  const QuadExt& alpha = p.alpha;
  const QuadExt two_alpha_minus_1 = QuadExt(2L) * alpha - QuadExt(1L);
  std::vector<ClauseResult> c;
  c.push_back(Clause("i")
                  .require(nonzero(mu), "mu != 0")
                  .require(!alpha.is_rational(), "alpha not rational")
                  .require(nonzero(nu), "nu != 0")
                  .done());
  // nu / sqrt(-mu) is rational iff nu^2 / (-mu) is the square of a rational.
  const bool ratio_rational = nonzero(mu) && is_rational_square(nu * nu / (-mu));
  c.push_back(Clause("ii")
                  .require(nonzero(mu), "mu != 0")
                  .require(!ratio_rational, "nu/sqrt(-mu) not rational")
                  .require(!two_alpha_minus_1.in_Z_leq0(), "2 alpha - 1 not a nonpositive integer")
                  .done());
  c.push_back(Clause("iii")
                  .require(mu.is_zero(), "mu == 0")
                  .require(nonzero(nu), "nu != 0")
                  .require(!two_alpha_minus_1.in_Z_leq0(), "2 alpha - 1 not a nonpositive integer")
                  .done());
  return finish(ClauseFamily::fold_hopf, std::move(c));
}

TheoremClauseReport theorem_conditions(const DoubleHopfParams& params, int chart) {
  if (chart != 1 && chart != 2) throw std::invalid_argument("chart must be 1 or 2");
  // The chart-2 clauses are the chart-1 clauses at the swapped parameters.
  const DoubleHopfParams p = chart == 2 ? chart2_parameters(params) : params;
  check_sign(p.s);
  const QuadExt& mu = p.mu;
  const QuadExt& nu = p.nu;
  const QuadExt& alpha = p.alpha;
  const QuadExt& beta = p.beta;
  const QuadExt s(static_cast<long>(p.s));
  const QuadExt c1 = beta * nu - mu * s;
  const QuadExt c2 = (alpha * mu + nu) * s - c1;

  std::vector<ClauseResult> c;
  if (nonzero(mu)) {
    const QuadExt ratio = nu / mu;
    c.push_back(Clause("i")
                    .require(!ratio.is_rational(), "nu/mu not rational")
                    .require(!alpha.in_Z_geq0(), "alpha not a nonnegative integer")
                    .require(!(alpha + ratio + QuadExt(2L)).in_Z_leq0(), "alpha + nu/mu + 2 not a nonpositive integer")
                    .require(nonzero(c1), "beta nu - mu s != 0")
                    .require(nonzero(c2), "(alpha mu + nu) s - (beta nu - mu s) != 0")
                    .done());
    c.push_back(Clause("ii")
                    .require(!(alpha + ratio).is_rational(), "alpha + nu/mu not rational")
                    .require(!alpha.in_Z_geq0(), "alpha not a nonnegative integer")
                    .require(nonzero(c1), "beta nu - mu s != 0")
                    .require(nonzero(c2), "(alpha mu + nu) s - (beta nu - mu s) != 0")
                    .done());
  } else {
    c.push_back(Clause("i").require(false, "mu != 0").done());
    c.push_back(Clause("ii").require(false, "mu != 0").done());
  }
  c.push_back(Clause("iii")
                  .require(mu.is_zero(), "mu == 0")
                  .require(nonzero(nu), "nu != 0")
                  .require(!alpha.in_Z_geq0(), "alpha not a nonnegative integer")
                  .require(!(beta == s), "beta != s")
                  .done());
  return finish(chart == 2 ? ClauseFamily::double_hopf_chart2 : ClauseFamily::double_hopf_chart1, std::move(c));
}

}  // namespace nonint
