#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 handling tailored to what the engine needs: codepoint
// iteration with byte widths, a letter/digit classifier that covers the
// alphabets formulas and prose actually use (Latin, Greek, Cyrillic, plus
// the math-alphanumeric block so Fraktur/script letters pass through), and
// simple case folding for those same ranges. Anything outside the known
// ranges is treated conservatively as a non-letter symbol.
namespace simdex::utf8 {

struct Decoded {
    char32_t cp = 0;
    std::size_t width = 0;  // 0 means invalid encoding at this position
};

Decoded decode(std::string_view s, std::size_t pos);
void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);

bool is_space(char32_t cp);
bool is_ascii_digit(char32_t cp);
bool is_letter(char32_t cp);
inline bool is_word_char(char32_t cp) { return is_letter(cp) || is_ascii_digit(cp); }

// Lowercases the ranges is_letter() knows about; identity elsewhere.
char32_t fold(char32_t cp);
std::string fold_copy(std::string_view s);

}  // namespace simdex::utf8
