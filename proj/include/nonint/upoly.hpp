#pragma once

#include <compare>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nonint/quadext.hpp"

namespace nonint {

/// Polynomial degree; the zero polynomial has degree -infinity, which compares
/// below every integer and absorbs addition.
class Degree {
 public:
  constexpr Degree(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(kNegInf, 0); }

  constexpr bool is_neg_inf() const { return v_ == kNegInf; }
  /// Throws std::logic_error for -infinity.
  int value() const;

  friend constexpr bool operator==(Degree, Degree) = default;
  friend constexpr std::strong_ordering operator<=>(Degree x, Degree y) { return x.v_ <=> y.v_; }
  friend constexpr Degree operator+(Degree x, Degree y) {
    return (x.is_neg_inf() || y.is_neg_inf()) ? neg_inf() : Degree(x.v_ + y.v_);
  }
  friend constexpr Degree operator-(Degree x, int y) {
    return x.is_neg_inf() ? neg_inf() : Degree(x.v_ - y);
  }

  std::string to_string() const;

 private:
  static constexpr int kNegInf = std::numeric_limits<int>::min();
  constexpr Degree(int v, int /*tag*/) : v_(v) {}
  int v_;
};

/// Dense univariate polynomial over Q(sqrt(d)), lowest degree first, trimmed.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const QuadExt& c);  // NOLINT(google-explicit-constructor)
  UPoly(long c) : UPoly(QuadExt(c)) {}  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<QuadExt> coeffs);

  static UPoly x();
  static UPoly monomial(const QuadExt& c, unsigned degree);
  /// (x - root)
  static UPoly linear(const QuadExt& root);

  const std::vector<QuadExt>& coeffs() const { return c_; }
  Degree degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  bool has_rational_coeffs() const;
  /// Coefficient of x^i (zero beyond the degree).
  QuadExt coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  QuadExt leading() const;

  UPoly monic() const;  // throws std::domain_error on zero
  UPoly derivative() const;
  /// Antiderivative with zero constant term.
  UPoly integral() const;
  QuadExt eval(const QuadExt& at) const;
  /// p(x + shift)
  UPoly shifted(const QuadExt& shift) const;
  UPoly conj() const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const QuadExt& s);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const QuadExt& s) { return a *= s; }
  friend UPoly operator*(const QuadExt& s, UPoly a) { return a *= s; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(std::string_view var = "xi") const;

 private:
  void trim();
  std::vector<QuadExt> c_;
};

UPoly pow(const UPoly& base, unsigned exp);

struct DivRem {
  UPoly quotient;
  UPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws std::domain_error when b == 0.
DivRem poly_divrem(const UPoly& a, const UPoly& b);

/// Exact quotient; throws std::domain_error if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

bool divides(const UPoly& b, const UPoly& a);

/// Monic gcd. Throws std::domain_error when both inputs are zero.
UPoly poly_gcd(const UPoly& a, const UPoly& b);

struct ExtendedGcd {
  UPoly gcd;  // monic
  UPoly s;    // s*a + t*b = gcd
  UPoly t;
};
ExtendedGcd poly_xgcd(const UPoly& a, const UPoly& b);

/// Canonical representative of a modulo p (p monic, deg p >= 1): an element of
/// K[x]/(p). Constant iff the value at every root of p is the same.
UPoly eval_mod(const UPoly& a, const UPoly& p);

/// Inverse of a modulo p; throws std::domain_error if gcd(a, p) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& p);

/// Degree of the squarefree part, i.e. the number of distinct complex roots.
int distinct_root_count(const UPoly& a);

}  // namespace nonint
