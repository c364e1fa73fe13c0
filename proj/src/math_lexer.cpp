#include "simdex/math_lexer.hpp"

#include <unordered_map>
#include <unordered_set>

#include "simdex/errors.hpp"
#include "simdex/utf8.hpp"

namespace simdex {

namespace {

const std::unordered_set<std::string>& function_commands() {
    static const std::unordered_set<std::string> set = {
        "sin", "cos", "tan", "cot", "sec", "csc",
        "sinh", "cosh", "tanh", "coth",
        "arcsin", "arccos", "arctan", "arccot",
        "exp", "ln", "log", "lg",
        "min", "max", "det", "arg", "lim", "sqrt",
    };
    return set;
}

const std::unordered_set<std::string>& accent_commands() {
    static const std::unordered_set<std::string> set = {
        "bar", "hat", "tilde", "vec", "dot", "ddot", "check", "breve",
        "overline", "underline", "widehat", "widetilde",
    };
    return set;
}

const std::unordered_set<std::string>& styling_commands() {
    static const std::unordered_set<std::string> set = {
        "mathbf", "mathit", "mathrm", "mathsf", "mathtt",
        "boldsymbol", "bm", "bf", "it", "rm", "em",
        "textbf", "textit", "textrm", "text", "emph",
    };
    return set;
}

// Commands that are pure layout and vanish from the token stream.
const std::unordered_set<std::string>& layout_commands() {
    static const std::unordered_set<std::string> set = {
        "quad", "qquad", "enspace", "thinspace", "medspace", "thickspace",
        "left", "right", "big", "Big", "bigg", "Bigg",
        "bigl", "bigr", "Bigl", "Bigr", "biggl", "biggr",
        "displaystyle", "textstyle", "limits", "nolimits", "nonumber", "notag",
    };
    return set;
}

// \alpha etc. lex straight to single-letter identifiers.
const std::unordered_map<std::string, char32_t>& greek_commands() {
    static const std::unordered_map<std::string, char32_t> map = {
        {"alpha", 0x3B1},  {"beta", 0x3B2},   {"gamma", 0x3B3},  {"delta", 0x3B4},
        {"epsilon", 0x3B5}, {"varepsilon", 0x3B5}, {"zeta", 0x3B6}, {"eta", 0x3B7},
        {"theta", 0x3B8},  {"vartheta", 0x3B8}, {"iota", 0x3B9}, {"kappa", 0x3BA},
        {"lambda", 0x3BB}, {"mu", 0x3BC},     {"nu", 0x3BD},     {"xi", 0x3BE},
        {"pi", 0x3C0},     {"varpi", 0x3C0},  {"rho", 0x3C1},    {"varrho", 0x3C1},
        {"sigma", 0x3C3},  {"varsigma", 0x3C2}, {"tau", 0x3C4},  {"upsilon", 0x3C5},
        {"phi", 0x3C6},    {"varphi", 0x3C6}, {"chi", 0x3C7},    {"psi", 0x3C8},
        {"omega", 0x3C9},
        {"Gamma", 0x393},  {"Delta", 0x394},  {"Theta", 0x398},  {"Lambda", 0x39B},
        {"Xi", 0x39E},     {"Pi", 0x3A0},     {"Sigma", 0x3A3},  {"Upsilon", 0x3A5},
        {"Phi", 0x3A6},    {"Psi", 0x3A8},    {"Omega", 0x3A9},
    };
    return map;
}

// Named operator symbols.
const std::unordered_map<std::string, const char*>& symbol_commands() {
    static const std::unordered_map<std::string, const char*> map = {
        {"cdot", "·"},   {"times", "×"},  {"pm", "±"},     {"mp", "∓"},
        {"div", "÷"},    {"ast", "∗"},    {"star", "⋆"},   {"circ", "∘"},
        {"bullet", "•"}, {"neq", "≠"},    {"ne", "≠"},     {"leq", "≤"},
        {"le", "≤"},     {"geq", "≥"},    {"ge", "≥"},     {"ll", "≪"},
        {"gg", "≫"},     {"sim", "∼"},    {"simeq", "≃"},  {"approx", "≈"},
        {"equiv", "≡"},  {"propto", "∝"}, {"infty", "∞"},  {"partial", "∂"},
        {"nabla", "∇"},  {"int", "∫"},    {"iint", "∬"},   {"oint", "∮"},
        {"sum", "∑"},    {"prod", "∏"},   {"to", "→"},     {"rightarrow", "→"},
        {"leftarrow", "←"}, {"Rightarrow", "⇒"}, {"Leftarrow", "⇐"},
        {"leftrightarrow", "↔"}, {"mapsto", "↦"}, {"in", "∈"}, {"notin", "∉"},
        {"subset", "⊂"}, {"supset", "⊃"}, {"cup", "∪"},    {"cap", "∩"},
        {"emptyset", "∅"}, {"forall", "∀"}, {"exists", "∃"}, {"setminus", "∖"},
        {"oplus", "⊕"},  {"otimes", "⊗"}, {"perp", "⊥"},   {"parallel", "∥"},
        {"wedge", "∧"},  {"vee", "∨"},    {"ldots", "…"},  {"cdots", "⋯"},
        {"dots", "…"},
    };
    return map;
}

bool is_command_letter(char32_t cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

}  // namespace

bool is_function_command(const std::string& name) { return function_commands().count(name) > 0; }
bool is_accent_command(const std::string& name) { return accent_commands().count(name) > 0; }
bool is_styling_command(const std::string& name) { return styling_commands().count(name) > 0; }

std::vector<MathToken> lex_formula(std::string_view src) {
    std::vector<MathToken> out;
    std::size_t i = 0;

    auto push = [&](MathTokenKind kind, std::string text, std::size_t at) {
        MathToken t;
        t.kind = kind;
        t.text = std::move(text);
        t.offset = at;
        out.push_back(std::move(t));
    };
    auto push_bracket = [&](MathTokenKind kind, BracketKind bk, char c, std::size_t at) {
        MathToken t;
        t.kind = kind;
        t.text = std::string(1, c);
        t.bracket = bk;
        t.offset = at;
        out.push_back(std::move(t));
    };

    while (i < src.size()) {
        const std::size_t at = i;
        auto d = utf8::decode(src, i);
        if (d.width == 0) throw FormulaError("invalid UTF-8 byte in formula", at);
        const char32_t cp = d.cp;

        if (utf8::is_space(cp) || cp == '~' || cp == '&') {  // & is an alignment mark
            i += d.width;
            continue;
        }

        if (cp == '\\') {
            ++i;
            if (i < src.size() && src[i] == '\\') {  // row separator in systems
                push(MathTokenKind::RowSep, "\\\\", at);
                ++i;
                continue;
            }
            // One-character control symbols: spacing and escaped braces/bars.
            if (i < src.size() && !is_command_letter(static_cast<unsigned char>(src[i]))) {
                const char c = src[i];
                ++i;
                switch (c) {
                    case ',': case ';': case ':': case '!': case ' ':
                        continue;  // spacing
                    case '{': push_bracket(MathTokenKind::Open, BracketKind::Brace, '{', at); continue;
                    case '}': push_bracket(MathTokenKind::Close, BracketKind::Brace, '}', at); continue;
                    case '|': push(MathTokenKind::Bar, "|", at); continue;
                    default:
                        // Digit names are reserved for rewrite-rule wildcards.
                        if (c >= '0' && c <= '9') {
                            push(MathTokenKind::Command, std::string(1, c), at);
                            continue;
                        }
                        push(MathTokenKind::Op, std::string(1, c), at);
                        continue;
                }
            }
            std::string name;
            while (i < src.size()) {
                auto cd = utf8::decode(src, i);
                if (cd.width == 0 || !is_command_letter(cd.cp)) break;
                name.push_back(static_cast<char>(cd.cp));
                i += cd.width;
            }
            if (name.empty()) throw FormulaError("stray backslash", at);

            if (layout_commands().count(name)) continue;
            if (name == "begin" || name == "end") {
                // Environment wrapper: swallow the {name} that follows.
                while (i < src.size() && utf8::is_space(static_cast<unsigned char>(src[i]))) ++i;
                if (i < src.size() && src[i] == '{') {
                    auto close = src.find('}', i);
                    if (close == std::string_view::npos)
                        throw FormulaError("unterminated environment name", i);
                    i = close + 1;
                }
                continue;
            }
            if (auto g = greek_commands().find(name); g != greek_commands().end()) {
                push(MathTokenKind::Ident, utf8::encode(g->second), at);
                continue;
            }
            if (auto s = symbol_commands().find(name); s != symbol_commands().end()) {
                push(MathTokenKind::Op, s->second, at);
                continue;
            }
            if (name == "prime") {
                push(MathTokenKind::PrimeMark, "'", at);
                continue;
            }
            if (name == "vert" || name == "lvert" || name == "rvert" || name == "mid") {
                push(MathTokenKind::Bar, "|", at);
                continue;
            }
            if (name == "frac" || is_function_command(name) || is_accent_command(name) ||
                is_styling_command(name)) {
                push(MathTokenKind::Command, name, at);
                continue;
            }
            // Unknown command: the parser turns this into an opaque leaf.
            push(MathTokenKind::Command, name, at);
            continue;
        }

        if (utf8::is_ascii_digit(cp)) {
            std::string digits;
            while (i < src.size() && utf8::is_ascii_digit(static_cast<unsigned char>(src[i]))) {
                digits.push_back(src[i]);
                ++i;
            }
            // Decimal point only when digits follow; a trailing dot is an Op.
            if (i + 1 < src.size() && src[i] == '.' &&
                utf8::is_ascii_digit(static_cast<unsigned char>(src[i + 1]))) {
                digits.push_back('.');
                ++i;
                while (i < src.size() && utf8::is_ascii_digit(static_cast<unsigned char>(src[i]))) {
                    digits.push_back(src[i]);
                    ++i;
                }
            }
            push(MathTokenKind::Number, std::move(digits), at);
            continue;
        }

        if (utf8::is_letter(cp)) {  // exactly one letter per Ident
            push(MathTokenKind::Ident, utf8::encode(cp), at);
            i += d.width;
            continue;
        }

        i += d.width;
        switch (cp) {
            case '^': push(MathTokenKind::Sup, "^", at); break;
            case '_': push(MathTokenKind::Sub, "_", at); break;
            case '\'': push(MathTokenKind::PrimeMark, "'", at); break;
            case 0x2032: push(MathTokenKind::PrimeMark, "'", at); break;  // ′
            case 0x2033:                                                  // ″
                push(MathTokenKind::PrimeMark, "'", at);
                push(MathTokenKind::PrimeMark, "'", at);
                break;
            case 0x2034:                                                  // ‴
                push(MathTokenKind::PrimeMark, "'", at);
                push(MathTokenKind::PrimeMark, "'", at);
                push(MathTokenKind::PrimeMark, "'", at);
                break;
            case '(': push_bracket(MathTokenKind::Open, BracketKind::Paren, '(', at); break;
            case ')': push_bracket(MathTokenKind::Close, BracketKind::Paren, ')', at); break;
            case '[': push_bracket(MathTokenKind::Open, BracketKind::Square, '[', at); break;
            case ']': push_bracket(MathTokenKind::Close, BracketKind::Square, ']', at); break;
            case '{': push_bracket(MathTokenKind::Open, BracketKind::Brace, '{', at); break;
            case '}': push_bracket(MathTokenKind::Close, BracketKind::Brace, '}', at); break;
            case '|': push(MathTokenKind::Bar, "|", at); break;
            case 0x2212:  // unicode minus folds onto ASCII '-'
                push(MathTokenKind::Op, "-", at);
                break;
            case 0x22C5:  // ⋅ folds onto ·
                push(MathTokenKind::Op, "·", at);
                break;
            default:
                push(MathTokenKind::Op, utf8::encode(cp), at);
                break;
        }
    }

    if (out.empty()) throw FormulaError("empty formula", 0);
    return out;
}

}  // namespace simdex
