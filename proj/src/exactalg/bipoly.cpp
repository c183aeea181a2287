#include "nonint/bipoly.hpp"

#include <algorithm>

namespace nonint {

BiPoly::BiPoly(const QuadExt& c) {
  if (!c.is_zero()) t_.emplace(Exponents{0, 0}, c);
}

BiPoly BiPoly::xi() { return term(QuadExt(1L), 1, 0); }

BiPoly BiPoly::eta() { return term(QuadExt(1L), 0, 1); }

BiPoly BiPoly::term(const QuadExt& c, unsigned xi_pow, unsigned eta_pow) {
  BiPoly p;
  p.add_term({xi_pow, eta_pow}, c);
  return p;
}

BiPoly BiPoly::from_xi(const UPoly& p) {
  BiPoly r;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) r.add_term({static_cast<unsigned>(i), 0}, c[i]);
  return r;
}

void BiPoly::add_term(const Exponents& e, const QuadExt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

unsigned BiPoly::eta_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.second);
  return d;
}

unsigned BiPoly::xi_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : t_) d = std::max(d, e.first);
  return d;
}

QuadExt BiPoly::coeff(unsigned xi_pow, unsigned eta_pow) const {
  auto it = t_.find({xi_pow, eta_pow});
  return it == t_.end() ? QuadExt() : it->second;
}

std::vector<UPoly> BiPoly::eta_coefficients() const {
  if (t_.empty()) return {};
  std::vector<std::vector<QuadExt>> rows(eta_degree() + 1);
  for (const auto& [e, c] : t_) {
    auto& row = rows[e.second];
    if (row.size() <= e.first) row.resize(e.first + 1);
    row[e.first] = c;
  }
  std::vector<UPoly> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.emplace_back(std::move(row));
  return out;
}

RatFunc BiPoly::substitute_eta(const RatFunc& phi) const {
  const auto rows = eta_coefficients();
  RatFunc acc;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    acc = acc * phi + RatFunc(*it);
  }
  return acc;
}

QuadExt BiPoly::eval(const QuadExt& x, const QuadExt& y) const {
  QuadExt acc;
  for (const auto& [e, c] : t_) acc += c * pow(x, e.first) * pow(y, e.second);
  return acc;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.t_) add_term(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const QuadExt& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [e, c] : t_) c *= s;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return r;
}

BiPoly pow(const BiPoly& base, unsigned exp) {
  BiPoly result(1L);
  for (unsigned i = 0; i < exp; ++i) result = result * base;
  return result;
}

namespace {

std::string monomial_text(unsigned i, unsigned j) {
  std::string s;
  auto append = [&s](const char* var, unsigned p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (p > 1) s += "^" + std::to_string(p);
  };
  append("xi", i);
  append("eta", j);
  return s;
}

}  // namespace

std::string BiPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  // Descending total degree, then descending xi power.
  std::vector<std::pair<Exponents, QuadExt>> items(t_.begin(), t_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    const unsigned dx = x.first.first + x.first.second;
    const unsigned dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  for (const auto& [e, c] : items) {
    const bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
    const QuadExt mag = negative ? -c : c;
    const std::string mono = monomial_text(e.first, e.second);
    std::string term;
    if (mono.empty()) {
      term = mag.to_string();
    } else {
      term = mag.is_one() ? mono : mag.to_string() + "*" + mono;
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

}  // namespace nonint
