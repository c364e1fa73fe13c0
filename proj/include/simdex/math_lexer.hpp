#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "simdex/math_ast.hpp"

namespace simdex {

// Token stream for one formula. Whitespace never reaches the parser, and
// identifiers are exactly one letter each — a multi-letter run like `bex`
// lexes as three Ident tokens. Styling wrappers (\mathbf and friends) are
// consumed here so styled and plain sources produce one token stream;
// alignment marks, sizing commands and environment wrappers are dropped as
// layout. Offsets are byte positions into the formula payload.
enum class MathTokenKind : std::uint8_t {
    Ident,      // one letter
    Number,     // digits, optional decimal point
    Op,         // one operator / punctuation symbol
    Open,       // ( [ {
    Close,      // ) ] }
    Bar,        // |
    Sup,        // ^
    Sub,        // _
    PrimeMark,  // ' or ′ (″ expands to two marks)
    Command,    // \name that the parser resolves (functions, accents, unknowns)
    RowSep,     // \\ inside display systems
};

struct MathToken {
    MathTokenKind kind;
    std::string text;  // ident letter, digits, op symbol, or command name
    BracketKind bracket = BracketKind::Paren;  // Open/Close only
    std::size_t offset = 0;
};

// Throws FormulaError on invalid UTF-8 or an empty formula.
std::vector<MathToken> lex_formula(std::string_view source);

// Command classification shared with the parser.
bool is_function_command(const std::string& name);
bool is_accent_command(const std::string& name);
bool is_styling_command(const std::string& name);

}  // namespace simdex
