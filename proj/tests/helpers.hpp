#pragma once

#include <initializer_list>
#include <random>

#include "nonint/factor.hpp"

namespace testutil {

using namespace nonint;

inline const FieldSpec kQ2{2};

inline QuadExt q(long num, long den = 1) { return QuadExt(Rational(num, den)); }
inline QuadExt qe(const Rational& a, const Rational& b, FieldSpec f = kQ2) { return QuadExt(a, b, f); }
inline QuadExt rt2() { return QuadExt::surd(kQ2); }

/// Polynomial from coefficients, lowest degree first.
inline UPoly poly(std::initializer_list<QuadExt> c) { return UPoly(std::vector<QuadExt>(c)); }

inline const UPoly X = UPoly::x();

/// Small random element of Q(sqrt(2)) (rational with probability 1/2).
inline QuadExt random_q2(std::mt19937_64& rng, bool allow_zero = true) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4), coin(0, 1);
  for (;;) {
    Rational a(num(rng), den(rng));
    Rational b = coin(rng) != 0 ? Rational(num(rng), den(rng)) : Rational(0);
    a.canonicalize();
    b.canonicalize();
    QuadExt v(a, b, kQ2);
    if (allow_zero || !v.is_zero()) return v;
  }
}

inline UPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<QuadExt> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_q2(rng));
  c.push_back(random_q2(rng, false));
  return UPoly(std::move(c));
}

}  // namespace testutil
