#pragma once

#include <string>

#include "chow/cycles.hpp"

namespace chow {

// Human-readable cycle grammar:
//   sum    := ['+'|'-'] term (('+'|'-') term)*
//   term   := [integer '*'] atom
//   atom   := 'C' '(' element ')' | 'Z' '(' element ',' element ')' | bracket
//   bracket:= '[' coord ',' coord ',' coord ']'
// where coord is a rational expression in x over the field (+, -, *, /, ^,
// parentheses, 'g' for the primitive root) whose numerator and denominator
// factor into linear pieces visible in the expression.
CurveSum parse_cycle_sum(const FieldPtr& ctx, const std::string& text);

// A single bracket triple, kept verbatim (no canonicalization).
CurveTerm parse_bracket_term(const FieldPtr& ctx, const std::string& text);

// One coordinate expression, e.g. "1 - 2/x" or "(1-x)*(2-x)".
FactoredRational parse_coordinate(const FieldPtr& ctx, const std::string& text);

}  // namespace chow
