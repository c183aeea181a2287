#pragma once

#include <map>
#include <string>
#include <utility>

#include "nonint/ratfunc.hpp"

namespace nonint {

/// Sparse bivariate polynomial in (xi, eta); no stored zero coefficients.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (xi power, eta power)
  using TermMap = std::map<Exponents, QuadExt>;

  BiPoly() = default;
  BiPoly(const QuadExt& c);  // NOLINT(google-explicit-constructor)
  BiPoly(long c) : BiPoly(QuadExt(c)) {}  // NOLINT(google-explicit-constructor)

  static BiPoly xi();
  static BiPoly eta();
  static BiPoly term(const QuadExt& c, unsigned xi_pow, unsigned eta_pow);
  /// Embeds a univariate polynomial in xi.
  static BiPoly from_xi(const UPoly& p);

  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  unsigned eta_degree() const;
  unsigned xi_degree() const;
  QuadExt coeff(unsigned xi_pow, unsigned eta_pow) const;

  /// The polynomial as sum_j c_j(xi) eta^j; entry j is c_j.
  std::vector<UPoly> eta_coefficients() const;

  /// P(xi, phi(xi)) as a rational function of xi.
  RatFunc substitute_eta(const RatFunc& phi) const;
  QuadExt eval(const QuadExt& xi, const QuadExt& eta) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const QuadExt& s);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const QuadExt& s) { return a *= s; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const QuadExt& c);
  TermMap t_;
};

BiPoly pow(const BiPoly& base, unsigned exp);

}  // namespace nonint
