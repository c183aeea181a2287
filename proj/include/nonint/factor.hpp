#pragma once

#include <vector>

#include "nonint/ratfunc.hpp"

namespace nonint {

/// A monic polynomial standing for all of its roots, with a shared multiplicity.
struct FactorClass {
  UPoly factor;
  int multiplicity = 1;

  friend bool operator==(const FactorClass&, const FactorClass&) = default;
};

/// a = lc * prod p_i^{m_i}, p_i monic squarefree and pairwise coprime, ordered by
/// increasing multiplicity. Throws std::domain_error on the zero polynomial.
std::vector<FactorClass> squarefree_decompose(const UPoly& a);

/// Irreducible factorization over Q(sqrt(d)). The field is taken from the
/// coefficients when any of them is irrational, otherwise from `field`.
/// Factors are monic and sorted canonically. Throws std::domain_error for
/// constant input.
std::vector<FactorClass> factor_irreducible(const UPoly& a, FieldSpec field = FieldSpec());

struct PartialFractionTerm {
  FactorClass cls;  // the denominator class and its full multiplicity
  int order = 1;    // power of cls.factor in this term's denominator
  UPoly numerator;  // deg < deg cls.factor, nonzero

  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

struct PartialFractions {
  UPoly poly_part;
  std::vector<PartialFractionTerm> terms;  // by class, then increasing order
};

/// f = poly_part + sum numerator / factor^order.
PartialFractions partial_fractions(const RatFunc& f, FieldSpec field = FieldSpec());

/// The field in which the coefficients of p live (d == 1 if all are rational).
FieldSpec coefficient_field(const UPoly& p, FieldSpec fallback = FieldSpec());

}  // namespace nonint
