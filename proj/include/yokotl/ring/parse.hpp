#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "yokotl/ring/rational_function.hpp"

namespace yokotl {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Parses an arithmetic expression over integers, variable names and the
/// constants zeta<d> (a primitive d-th root of unity), with + - * / ^ and
/// parentheses.  Exponents are integer literals, optionally negative:
/// `-1*q^-2 + 2*q^3*E^-1`, `(1-E)*(q-1)^5/(E*q^18)`.
RationalFunction parse_expression(std::string_view text);

/// As parse_expression, but the value must be a Laurent polynomial.  This is
/// the inverse of LaurentPolynomial::str().
LaurentPolynomial parse_polynomial(std::string_view text);

}  // namespace yokotl
