#include "nonint/quadext.hpp"

#include <cmath>
#include <stdexcept>

namespace nonint {

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::int64_t n = d < 0 ? -d : d;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::int64_t d) : d_(d) {
  if (!is_squarefree(d)) {
    throw std::invalid_argument("field parameter d=" + std::to_string(d) +
                                " must be a nonzero squarefree integer");
  }
}

QuadExt::QuadExt(const Rational& a, const Rational& b, FieldSpec field)
    : a_(a), b_(b), field_(field) {
  a_.canonicalize();
  b_.canonicalize();
  if (field_.is_rational_field() && sgn(b_) != 0) {
    throw std::invalid_argument("surd part must vanish over Q (d=1)");
  }
}

QuadExt QuadExt::surd(FieldSpec field) {
  if (field.is_rational_field()) {
    throw std::invalid_argument("sqrt(1) is not adjoined: the field is Q");
  }
  return QuadExt(Rational(0), Rational(1), field);
}

bool QuadExt::is_integer() const {
  return sgn(b_) == 0 && a_.get_den() == 1;
}

bool QuadExt::is_natural() const { return is_integer() && sgn(a_) > 0; }

bool QuadExt::in_Z_leq0() const { return is_integer() && sgn(a_) <= 0; }

bool QuadExt::in_Z_geq0() const { return is_integer() && sgn(a_) >= 0; }

QuadExt QuadExt::conj() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const {
  Rational r = a_ * a_ - Rational(field_.d()) * b_ * b_;
  r.canonicalize();
  return r;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt(d))");
  const Rational n = norm();
  QuadExt r = conj();
  r.a_ /= n;
  r.b_ /= n;
  r.settle();
  return r;
}

void QuadExt::adopt_field(const QuadExt& o) {
  if (field_ == o.field_) return;
  const bool mine = sgn(b_) != 0;
  const bool theirs = sgn(o.b_) != 0;
  if (mine && theirs) {
    throw std::invalid_argument("mixing elements of Q(sqrt(" + std::to_string(field_.d()) +
                                ")) and Q(sqrt(" + std::to_string(o.field_.d()) + "))");
  }
  if (theirs || field_.is_rational_field()) field_ = o.field_;
}

void QuadExt::settle() {
  a_.canonicalize();
  b_.canonicalize();
}

QuadExt QuadExt::operator-() const {
  QuadExt r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  adopt_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  adopt_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  adopt_field(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + Rational(field_.d()) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  settle();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw std::domain_error("division by zero in Q(sqrt(d))");
    adopt_field(o);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.field_ == y.field_;
}

std::strong_ordering canonical_compare(const QuadExt& x, const QuadExt& y) {
  const int ca = cmp(x.a_, y.a_);
  if (ca != 0) return ca < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  const int cb = cmp(x.b_, y.b_);
  if (cb != 0) return cb < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

long double QuadExt::approx_real() const {
  long double v = static_cast<long double>(a_.get_d());
  if (field_.d() > 0 && sgn(b_) != 0) {
    v += static_cast<long double>(b_.get_d()) * std::sqrt(static_cast<long double>(field_.d()));
  }
  return v;
}

long double QuadExt::approx_imag() const {
  if (field_.d() < 0 && sgn(b_) != 0) {
    return static_cast<long double>(b_.get_d()) *
           std::sqrt(static_cast<long double>(-field_.d()));
  }
  return 0.0L;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string QuadExt::to_string() const {
  if (sgn(b_) == 0) return rational_to_string(a_);
  std::string surd;
  if (b_ == 1) {
    surd = "rt";
  } else if (b_ == -1) {
    surd = "-rt";
  } else {
    surd = rational_to_string(b_) + "*rt";
  }
  if (sgn(a_) == 0) return sgn(b_) < 0 ? "(" + surd + ")" : surd;
  std::string s = "(" + rational_to_string(a_);
  if (sgn(b_) > 0) s += "+";
  return s + surd + ")";
}

QuadExt pow(QuadExt base, unsigned exp) {
  QuadExt result(1L);
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

}  // namespace nonint
