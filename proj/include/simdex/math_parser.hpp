#pragma once

#include <string_view>
#include <vector>

#include "simdex/math_ast.hpp"
#include "simdex/math_lexer.hpp"

namespace simdex {

// Builds the AST for one formula. There is no operator precedence — a
// formula is a flat sequence of atoms — but structure the notation itself
// carries is kept: brackets (kind-sensitive), |...| pairs (greedy, left to
// right, no nesting), sub/superscripts binding to the atom just before
// them, fractions, primes, and named function application. Throws
// FormulaError with a byte offset on unbalanced brackets, dangling scripts,
// an odd number of bars and similar malformed input; an unknown command is
// not an error, it becomes an opaque leaf.
FormulaAst parse_formula(const std::vector<MathToken>& tokens);

// Convenience wrapper: lex + parse.
FormulaAst parse_formula(std::string_view source);

}  // namespace simdex
