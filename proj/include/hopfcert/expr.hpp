#pragma once

#include <string>

#include "hopfcert/poly.hpp"

namespace hopfcert {

// Small expression language for problem files: polynomials in the single
// variable `a` over exact decimal/rational literals, with + - * / ^ and
// parentheses. Division is restricted to nonzero constant divisors; exponents
// are nonnegative integer literals. Decimal literals convert exactly.
struct ParseError : std::runtime_error {
  int column;
  ParseError(const std::string& msg, int col)
      : std::runtime_error(msg + " at 1:" + std::to_string(col)), column(col) {}
};

QPoly parse_expr(const std::string& text);

// canonical form accepted back by parse_expr
std::string expr_to_string(const QPoly& p);

}  // namespace hopfcert
