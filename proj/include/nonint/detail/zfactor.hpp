#pragma once

// Factorization of univariate integer polynomials (Zassenhaus: modular
// factorization, Hensel lifting, subset recombination). Internal to exactalg.

#include <vector>

#include "nonint/quadext.hpp"

namespace nonint::detail {

/// Dense integer polynomial, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;

/// Irreducible factors over Z of a primitive, squarefree polynomial of degree
/// >= 1. Factors are primitive with positive leading coefficient; their product
/// equals the input up to sign.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

}  // namespace nonint::detail
