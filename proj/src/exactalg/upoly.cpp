#include "nonint/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nonint {

int Degree::value() const {
  if (is_neg_inf()) throw std::logic_error("degree of the zero polynomial has no integer value");
  return v_;
}

std::string Degree::to_string() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

UPoly::UPoly(const QuadExt& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<QuadExt> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x() { return monomial(QuadExt(1L), 1); }

UPoly UPoly::monomial(const QuadExt& c, unsigned degree) {
  if (c.is_zero()) return {};
  std::vector<QuadExt> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::linear(const QuadExt& root) { return UPoly(std::vector<QuadExt>{-root, QuadExt(1L)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Degree UPoly::degree() const {
  return c_.empty() ? Degree::neg_inf() : Degree(static_cast<int>(c_.size()) - 1);
}

bool UPoly::has_rational_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const QuadExt& q) { return q.is_rational(); });
}

QuadExt UPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : QuadExt(); }

QuadExt UPoly::leading() const { return c_.empty() ? QuadExt() : c_.back(); }

UPoly UPoly::monic() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no monic normalization");
  if (c_.back().is_one()) return *this;
  const QuadExt inv = c_.back().inverse();
  UPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<QuadExt> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * QuadExt(static_cast<long>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::integral() const {
  if (c_.empty()) return {};
  std::vector<QuadExt> v(c_.size() + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    v[i + 1] = c_[i] / QuadExt(static_cast<long>(i + 1));
  }
  return UPoly(std::move(v));
}

QuadExt UPoly::eval(const QuadExt& at) const {
  QuadExt acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::shifted(const QuadExt& shift) const {
  // Horner in the shifted variable.
  UPoly acc;
  const UPoly lin(std::vector<QuadExt>{shift, QuadExt(1L)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin + UPoly(*it);
  }
  return acc;
}

UPoly UPoly::conj() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = c.conj();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<QuadExt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const QuadExt& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string UPoly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const QuadExt& c = c_[k];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    bool negative = false;
    if (c.is_rational() && sgn(c.rational_part()) < 0) {
      negative = true;
      coef = (-c).to_string();
    }
    std::string term;
    if (k == 0) {
      term = coef;
    } else {
      std::string mono(var);
      if (k > 1) mono += "^" + std::to_string(k);
      term = (c.is_one() || (negative && (-c).is_one())) ? mono : coef + "*" + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

UPoly pow(const UPoly& base, unsigned exp) {
  UPoly result(1L);
  UPoly b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

DivRem poly_divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const QuadExt inv_lead = bc.back().inverse();
  std::vector<QuadExt> r = a.coeffs();
  std::vector<QuadExt> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const QuadExt f = r[k] * inv_lead;
    q[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= f * bc[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) { return poly_divrem(a, b).remainder.is_zero(); }

UPoly poly_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = poly_divrem(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x.monic();
}

ExtendedGcd poly_xgcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  UPoly r0 = a, r1 = b;
  UPoly s0(1L), s1;
  UPoly t0, t1(1L);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const QuadExt inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UPoly eval_mod(const UPoly& a, const UPoly& p) {
  if (p.degree() < Degree(1)) throw std::invalid_argument("eval_mod needs deg p >= 1");
  return poly_divrem(a, p.monic()).remainder;
}

UPoly inverse_mod(const UPoly& a, const UPoly& p) {
  const ExtendedGcd g = poly_xgcd(eval_mod(a, p), p);
  if (g.gcd.degree() != Degree(0)) throw std::domain_error("polynomial not invertible modulo p");
  return eval_mod(g.s, p);
}

int distinct_root_count(const UPoly& a) {
  if (a.degree() < Degree(1)) return 0;
  const UPoly g = poly_gcd(a, a.derivative());
  return a.degree().value() - g.degree().value();
}

}  // namespace nonint
