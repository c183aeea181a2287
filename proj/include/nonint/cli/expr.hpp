#pragma once

// Text grammar for polynomials and rational functions over Q(sqrt(d)):
//   integers, rationals p/q, `rt` for sqrt(d), `xi`, `eta`, + - * ^, parentheses.
// Exponents are nonnegative integer literals. A single top-level `/` is allowed
// only when the target is a rational function.

#include <stdexcept>
#include <string>
#include <string_view>

#include "nonint/bipoly.hpp"

namespace nonint::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// `first_line` offsets reported line numbers, for text taken from a larger file.
BiPoly parse_bipoly(std::string_view text, FieldSpec field, int first_line = 1);

/// A rational function of xi; `eta` is rejected.
RatFunc parse_ratfunc(std::string_view text, FieldSpec field, int first_line = 1);

/// A constant of Q(sqrt(d)).
QuadExt parse_scalar(std::string_view text, FieldSpec field, int first_line = 1);

std::string print(const BiPoly& p);
std::string print(const RatFunc& f);
std::string print(const QuadExt& c);

}  // namespace nonint::cli
