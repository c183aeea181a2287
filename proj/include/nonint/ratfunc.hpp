#pragma once

#include <string>
#include <string_view>

#include "nonint/upoly.hpp"

namespace nonint {

/// Reduced rational function num/den: gcd(num, den) == 1, den monic.
/// The zero function is stored as 0/1.
class RatFunc {
 public:
  RatFunc() : den_(1L) {}
  RatFunc(const UPoly& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const QuadExt& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(QuadExt(c)) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error for a zero denominator.
  RatFunc(const UPoly& num, const UPoly& den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == Degree(0); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  RatFunc derivative() const;
  /// Throws std::domain_error at a pole.
  QuadExt eval(const QuadExt& at) const;
  RatFunc inverse() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

  std::string to_string(std::string_view var = "xi") const;

 private:
  UPoly num_;
  UPoly den_;
};

RatFunc pow(const RatFunc& base, unsigned exp);

}  // namespace nonint
