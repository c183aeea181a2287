#include "nonint/ratfunc.hpp"

#include <stdexcept>

namespace nonint {

RatFunc::RatFunc(const UPoly& num, const UPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(1L);
    return;
  }
  const UPoly g = poly_gcd(num, den);
  UPoly n = g.degree() > Degree(0) ? exact_div(num, g) : num;
  UPoly d = g.degree() > Degree(0) ? exact_div(den, g) : den;
  const QuadExt lead = d.leading();
  if (!lead.is_one()) {
    const QuadExt inv = lead.inverse();
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative() * den_.leading().inverse());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

QuadExt RatFunc::eval(const QuadExt& at) const {
  const QuadExt d = den_.eval(at);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(at) / d;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = RatFunc(num_ + o.num_, den_);
  return *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep the gcd small.
  const UPoly g1 = poly_gcd(num_, o.den_);
  const UPoly g2 = poly_gcd(o.num_, den_);
  UPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  UPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  const QuadExt lead = d.leading();
  if (!lead.is_one()) {
    const QuadExt inv = lead.inverse();
    n *= inv;
    d *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RatFunc pow(const RatFunc& base, unsigned exp) {
  RatFunc result(1L);
  RatFunc b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace nonint
