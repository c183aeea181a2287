#pragma once

// Exact arithmetic in the quadratic field Q(sqrt(d)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace nonint {

using Rational = mpq_class;
using Integer = mpz_class;

/// The coefficient field Q(sqrt(d)); d == 1 denotes Q itself.
class FieldSpec {
 public:
  FieldSpec() = default;
  explicit FieldSpec(std::int64_t d);  // throws std::invalid_argument unless squarefree and nonzero

  std::int64_t d() const { return d_; }
  bool is_rational_field() const { return d_ == 1; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::int64_t d_ = 1;
};

bool is_squarefree(std::int64_t d);

/// a + b*sqrt(d). Elements whose surd part is zero are field-agnostic and mix
/// freely with elements of any Q(sqrt(d)); two irrational elements must share d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& r) : a_(r) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadExt(const Rational& a, const Rational& b, FieldSpec field);

  static QuadExt surd(FieldSpec field);  // sqrt(d); throws for d == 1

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  /// The field this element was built in (d == 1 once the surd part cancels).
  FieldSpec field() const { return field_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const;
  bool is_natural() const;  // 1, 2, 3, ...
  bool in_Z_leq0() const;
  bool in_Z_geq0() const;

  QuadExt conj() const;
  Rational norm() const;  // a^2 - d b^2
  QuadExt inverse() const;  // throws std::domain_error on zero

  QuadExt operator-() const;
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend bool operator==(const QuadExt& x, const QuadExt& y);

  /// Total order used only for canonical sorting (lexicographic on parts).
  friend std::strong_ordering canonical_compare(const QuadExt& x, const QuadExt& y);

  /// Real value of a + b*sqrt(d) for d > 0; for d < 0 the imaginary part goes to `imag`.
  long double approx_real() const;
  long double approx_imag() const;

  /// Text in the input grammar: "3/2", "-rt", "(1/2+3*rt)".
  std::string to_string() const;

 private:
  void adopt_field(const QuadExt& o);
  void settle();

  Rational a_;
  Rational b_;
  FieldSpec field_;
};

QuadExt pow(QuadExt base, unsigned exp);

std::string rational_to_string(const Rational& r);

}  // namespace nonint
