#include "simdex/utf8.hpp"

namespace simdex::utf8 {

Decoded decode(std::string_view s, std::size_t pos) {
    if (pos >= s.size()) return {0, 0};
    const auto b0 = static_cast<unsigned char>(s[pos]);
    if (b0 < 0x80) return {b0, 1};

    auto cont = [&](std::size_t i) {
        return pos + i < s.size() &&
               (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
    };
    auto bits = [&](std::size_t i) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3F);
    };

    if ((b0 & 0xE0) == 0xC0) {
        if (!cont(1)) return {0, 0};
        char32_t cp = ((b0 & 0x1Fu) << 6) | bits(1);
        if (cp < 0x80) return {0, 0};  // overlong
        return {cp, 2};
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (!cont(1) || !cont(2)) return {0, 0};
        char32_t cp = ((b0 & 0x0Fu) << 12) | (bits(1) << 6) | bits(2);
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return {0, 0};
        return {cp, 3};
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (!cont(1) || !cont(2) || !cont(3)) return {0, 0};
        char32_t cp = ((b0 & 0x07u) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
        if (cp < 0x10000 || cp > 0x10FFFF) return {0, 0};
        return {cp, 4};
    }
    return {0, 0};
}

void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(char32_t cp) {
    std::string s;
    append(s, cp);
    return s;
}

bool is_space(char32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
           cp == '\v' || cp == 0xA0 || cp == 0x2009 || cp == 0x200A || cp == 0x2002 ||
           cp == 0x2003 || cp == 0x3000;
}

bool is_ascii_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_letter(char32_t cp) {
    if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
    if (cp < 0x80) return false;
    // Latin-1 letters (excluding multiplication/division signs).
    if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
    // Latin Extended-A/B, IPA extensions.
    if (cp >= 0x100 && cp <= 0x2AF) return true;
    // Greek and Coptic (letters only; skip tonos/punctuation slots).
    if (cp >= 0x370 && cp <= 0x3FF) {
        switch (cp) {
            case 0x374: case 0x375: case 0x37E: case 0x384: case 0x385: case 0x387:
                return false;
            default:
                return true;
        }
    }
    // Cyrillic + supplement.
    if (cp >= 0x400 && cp <= 0x52F) return true;
    // Latin/Greek extended additional.
    if (cp >= 0x1E00 && cp <= 0x1FFF) return true;
    // Kana, CJK, Hangul — coarse but keeps tokens sane on mixed input.
    if (cp >= 0x3040 && cp <= 0x30FF) return true;
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;
    if (cp >= 0xAC00 && cp <= 0xD7AF) return true;
    // Mathematical alphanumeric symbols (bold/italic/script/Fraktur letters).
    if (cp >= 0x1D400 && cp <= 0x1D7CB) return true;
    return false;
}

char32_t fold(char32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp >= 0x100 && cp <= 0x177) {
        if (cp == 0x130) return 'i';      // İ
        if (cp == 0x131) return cp;       // ı
        return (cp % 2 == 0) ? cp + 1 : cp;
    }
    if (cp == 0x178) return 0xFF;         // Ÿ
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    // Greek capitals.
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
    if (cp == 0x386) return 0x3AC;
    if (cp >= 0x388 && cp <= 0x38A) return cp + 0x25;
    if (cp == 0x38C) return 0x3CC;
    if (cp == 0x38E || cp == 0x38F) return cp + 0x3F;
    // Cyrillic capitals.
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

std::string fold_copy(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        auto d = decode(s, i);
        if (d.width == 0) {  // keep invalid bytes as-is; callers validate elsewhere
            out.push_back(s[i]);
            ++i;
            continue;
        }
        append(out, fold(d.cp));
        i += d.width;
    }
    return out;
}

}  // namespace simdex::utf8
