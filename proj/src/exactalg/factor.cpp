#include "nonint/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "nonint/detail/zfactor.hpp"

namespace nonint {
namespace {

std::strong_ordering compare_polys(const UPoly& x, const UPoly& y) {
  if (auto c = x.degree() <=> y.degree(); c != 0) return c;
  const auto& a = x.coeffs();
  const auto& b = y.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = canonical_compare(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void sort_classes(std::vector<FactorClass>& v) {
  std::sort(v.begin(), v.end(), [](const FactorClass& x, const FactorClass& y) {
    if (auto c = compare_polys(x.factor, y.factor); c != 0) return c < 0;
    return x.multiplicity < y.multiplicity;
  });
}

// Squarefree, rational coefficients, deg >= 1: monic irreducible factors over Q.
std::vector<UPoly> factor_over_q(const UPoly& p) {
  if (p.degree() == Degree(1)) return {p.monic()};
  Integer den(1);
  for (const auto& c : p.coeffs()) den = lcm(den, c.rational_part().get_den());
  detail::ZPoly z;
  for (const auto& c : p.coeffs()) {
    const Rational scaled = c.rational_part() * den;
    z.push_back(scaled.get_num());
  }
  std::vector<UPoly> out;
  for (const auto& f : detail::factor_squarefree_z(z)) {
    std::vector<QuadExt> coeffs;
    for (const auto& c : f) coeffs.emplace_back(Rational(c));
    out.push_back(UPoly(std::move(coeffs)).monic());
  }
  return out;
}

// Squarefree p over Q(sqrt(d)), d != 1, via norms (Trager).
std::vector<UPoly> factor_over_k(const UPoly& p, FieldSpec field) {
  if (p.degree() <= Degree(1)) return {p.monic()};
  const QuadExt root_d = QuadExt::surd(field);
  for (long s = 0;; s = s > 0 ? -s : 1 - s) {
    const QuadExt shift = root_d * QuadExt(s);
    const UPoly ps = p.shifted(-shift);
    const UPoly norm = ps * ps.conj();
    if (poly_gcd(norm, norm.derivative()).degree() != Degree(0)) continue;
    std::vector<UPoly> out;
    UPoly rest = ps.monic();
    for (const auto& n : factor_over_q(norm)) {
      const UPoly g = poly_gcd(rest, n);
      if (g.degree() <= Degree(0)) continue;
      rest = exact_div(rest, g);
      out.push_back(g.shifted(shift).monic());
    }
    return out;
  }
}

std::vector<UPoly> factor_squarefree(const UPoly& p, FieldSpec field) {
  if (field.is_rational_field()) return factor_over_q(p);
  if (!p.has_rational_coeffs()) return factor_over_k(p, field);
  std::vector<UPoly> out;
  for (const auto& q : factor_over_q(p)) {
    for (auto& f : factor_over_k(q, field)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

FieldSpec coefficient_field(const UPoly& p, FieldSpec fallback) {
  for (const auto& c : p.coeffs()) {
    if (!c.is_rational()) {
      if (!fallback.is_rational_field() && !(c.field() == fallback)) {
        throw std::invalid_argument("coefficients from different quadratic fields");
      }
      return c.field();
    }
  }
  return fallback;
}

std::vector<FactorClass> squarefree_decompose(const UPoly& a) {
  if (a.is_zero()) throw std::domain_error("squarefree decomposition of the zero polynomial");
  std::vector<FactorClass> out;
  if (a.degree() == Degree(0)) return out;
  // Yun's algorithm.
  const UPoly am = a.monic();
  const UPoly da = am.derivative();
  const UPoly b = poly_gcd(am, da);
  UPoly c = exact_div(am, b);
  UPoly d = exact_div(da, b) - c.derivative();
  int i = 1;
  while (c.degree() > Degree(0)) {
    const UPoly p = poly_gcd(c, d);
    c = exact_div(c, p);
    d = exact_div(d, p) - c.derivative();
    if (p.degree() > Degree(0)) out.push_back({p, i});
    ++i;
  }
  return out;
}

std::vector<FactorClass> factor_irreducible(const UPoly& a, FieldSpec field) {
  if (a.is_constant()) throw std::domain_error("factorization of a constant polynomial");
  field = coefficient_field(a, field);
  std::vector<FactorClass> out;
  for (const auto& part : squarefree_decompose(a)) {
    for (auto& f : factor_squarefree(part.factor, field)) out.push_back({std::move(f), part.multiplicity});
  }
  sort_classes(out);
  return out;
}

PartialFractions partial_fractions(const RatFunc& f, FieldSpec field) {
  PartialFractions out;
  const DivRem qr = poly_divrem(f.num(), f.den());
  out.poly_part = qr.quotient;
  if (qr.remainder.is_zero()) return out;
  const UPoly& den = f.den();
  field = coefficient_field(f.num(), coefficient_field(den, field));
  for (const auto& cls : factor_irreducible(den, field)) {
    const UPoly pm = pow(cls.factor, static_cast<unsigned>(cls.multiplicity));
    const UPoly cofactor = exact_div(den, pm);
    UPoly a = eval_mod(qr.remainder * inverse_mod(cofactor, pm), pm);
    // p-adic expansion a = sum q_i p^i, giving q_i / p^(m-i).
    std::vector<PartialFractionTerm> terms;
    for (int i = 0; i < cls.multiplicity && !a.is_zero(); ++i) {
      DivRem step = poly_divrem(a, cls.factor);
      if (!step.remainder.is_zero()) {
        terms.push_back({cls, cls.multiplicity - i, std::move(step.remainder)});
      }
      a = std::move(step.quotient);
    }
    std::reverse(terms.begin(), terms.end());
    for (auto& t : terms) out.terms.push_back(std::move(t));
  }
  return out;
}

}  // namespace nonint
