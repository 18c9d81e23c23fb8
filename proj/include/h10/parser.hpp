#pragma once

#include <string>
#include <string_view>

#include "h10/poly.hpp"

namespace h10 {

// Grammar:
//   equation := expr "=" expr [ "@arity=" NAT ]
//   expr     := ["+"|"-"] term (("+"|"-") term)*
//   term     := factor ("*" factor)*
//   factor   := atom ("^" NAT)?
//   atom     := NAT | VAR | "(" expr ")"
//   VAR      := "x" NAT, index >= 1
// Whitespace between tokens is insignificant. Coefficients are integer
// literals; there is no "/" in the alphabet, so rational constants are
// rejected where they appear. Exponents must be non-negative integer
// literals. "@arity=k" forces the equation arity to k, which must be at
// least the largest variable index used.
//
// The result is Equation(normalize(LHS - RHS), max(largest index, forced, 1)).
// Errors throw ParseError with a SourceSpan.
Equation parse_equation(std::string_view text);

// Canonical text "P = 0 @arity=k" with P in graded-lex descending order.
// parse_equation(render_equation(e)) is eq_canonical_equal to e.
std::string render_equation(const Equation& eq);

// Tuple forms "(a/b, c, ...)", length >= 1.
QTuple parse_tuple(std::string_view text);
std::string render_tuple(const QTuple& tuple);

}  // namespace h10
