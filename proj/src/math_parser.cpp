#include "simdex/math_parser.hpp"

#include <cstddef>
#include <optional>
#include <utility>

#include "simdex/errors.hpp"

namespace simdex {

namespace {

struct Terminator {
    enum Type { End, CloseBracket, Bar } type = End;
    BracketKind bracket = BracketKind::Paren;
};

class Parser {
public:
    explicit Parser(const std::vector<MathToken>& toks) : toks_(toks) {}

    FormulaAst run() {
        auto children = parse_seq({Terminator::End}, 0);
        if (pos_ != toks_.size())
            throw FormulaError("unmatched closing bracket", toks_[pos_].offset);
        if (children.empty()) throw FormulaError("empty formula", 0);
        return make_seq(std::move(children));
    }

private:
    const std::vector<MathToken>& toks_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= toks_.size(); }
    const MathToken& cur() const { return toks_[pos_]; }

    [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
        throw FormulaError(msg, offset);
    }

    static bool terminates(const MathToken& t, const Terminator& term) {
        if (term.type == Terminator::CloseBracket)
            return t.kind == MathTokenKind::Close && t.bracket == term.bracket;
        if (term.type == Terminator::Bar) return t.kind == MathTokenKind::Bar;
        return false;
    }

    // Main loop. Postfix marks (^ _ ') re-shape the node most recently added
    // to the sequence, which is exactly "the immediately preceding atom".
    std::vector<AstNode> parse_seq(const Terminator& term, std::size_t opener_offset) {
        std::vector<AstNode> children;
        while (true) {
            if (done()) {
                if (term.type == Terminator::End) return children;
                if (term.type == Terminator::Bar)
                    fail("unpaired '|'", opener_offset);
                fail("unbalanced bracket", opener_offset);
            }
            const MathToken& t = cur();
            if (terminates(t, term)) return children;

            switch (t.kind) {
                case MathTokenKind::Close:
                    if (term.type == Terminator::End)
                        fail("unmatched closing bracket", t.offset);
                    fail("mismatched bracket", t.offset);
                case MathTokenKind::Sup:
                case MathTokenKind::Sub: {
                    const bool is_sup = t.kind == MathTokenKind::Sup;
                    if (children.empty())
                        fail(is_sup ? "superscript with nothing before it"
                                    : "subscript with nothing before it",
                             t.offset);
                    ++pos_;
                    AstNode arg = parse_script_argument(t.offset);
                    AstNode base = std::move(children.back());
                    children.pop_back();
                    children.push_back(attach_script(std::move(base), is_sup, std::move(arg)));
                    break;
                }
                case MathTokenKind::PrimeMark: {
                    if (children.empty()) fail("prime with nothing before it", t.offset);
                    ++pos_;
                    AstNode base = std::move(children.back());
                    children.pop_back();
                    if (base.kind == NodeKind::Prime) {
                        base.prime_count += 1;
                        children.push_back(std::move(base));
                    } else {
                        children.push_back(make_prime(std::move(base), 1));
                    }
                    break;
                }
                default: {
                    auto nodes = parse_atom();
                    for (auto& n : nodes) children.push_back(std::move(n));
                    break;
                }
            }
        }
    }

    // One atom. Styling wrappers dissolve, so the result is a splice list;
    // every other case yields exactly one node.
    std::vector<AstNode> parse_atom() {
        const MathToken& t = cur();
        switch (t.kind) {
            case MathTokenKind::Ident:
                ++pos_;
                return {make_ident(t.text)};
            case MathTokenKind::Number:
                ++pos_;
                return {make_number(t.text)};
            case MathTokenKind::Op:
                ++pos_;
                return {make_op(t.text)};
            case MathTokenKind::RowSep:
                ++pos_;
                return {make_op(t.text)};
            case MathTokenKind::Open: {
                const BracketKind bk = t.bracket;
                const std::size_t at = t.offset;
                ++pos_;
                auto inner = parse_seq({Terminator::CloseBracket, bk}, at);
                ++pos_;  // the close bracket; parse_seq guarantees it is there
                if (inner.empty()) fail("empty brackets", at);
                return {make_group(bk, make_seq(std::move(inner)))};
            }
            case MathTokenKind::Bar: {
                const std::size_t at = t.offset;
                ++pos_;
                auto inner = parse_seq({Terminator::Bar}, at);
                ++pos_;  // closing bar
                if (inner.empty()) fail("empty absolute-value bars", at);
                return {make_abs(make_seq(std::move(inner)))};
            }
            case MathTokenKind::Command:
                return parse_command();
            default:
                fail("expected an operand", t.offset);
        }
    }

    std::vector<AstNode> parse_command() {
        const MathToken t = cur();
        const std::string& name = t.text;
        ++pos_;

        if (name == "frac") {
            AstNode num = parse_braced_or_atom(t.offset, "fraction numerator");
            AstNode den = parse_braced_or_atom(t.offset, "fraction denominator");
            return {make_frac(std::move(num), std::move(den))};
        }
        if (is_styling_command(name)) {
            // Dissolve: contents stand in the styled command's place.
            if (done() || !starts_argument(cur())) return {};
            if (cur().kind == MathTokenKind::Open && cur().bracket == BracketKind::Brace) {
                const std::size_t at = cur().offset;
                ++pos_;
                auto inner = parse_seq({Terminator::CloseBracket, BracketKind::Brace}, at);
                ++pos_;
                return inner;  // may be empty for \mathbf{}; nothing to add then
            }
            return parse_atom();
        }
        if (is_function_command(name) || is_accent_command(name)) {
            if (done() || !starts_argument(cur())) return {make_func(name, nullptr)};
            AstNode arg = parse_delimiter_stripped_argument(t.offset);
            return {make_func(name, &arg)};
        }
        // Unknown command: opaque leaf, never an error.
        return {make_opaque(name)};
    }

    static bool starts_argument(const MathToken& t) {
        switch (t.kind) {
            case MathTokenKind::Open:
            case MathTokenKind::Bar:
            case MathTokenKind::Ident:
            case MathTokenKind::Number:
            case MathTokenKind::Command:
                return true;
            default:
                return false;
        }
    }

    // Function/accent argument. A bracketed argument loses its delimiter so
    // that \exp x, \exp(x) and \exp{x} are the same application; the bracket
    // carries the argument, it is not part of it.
    AstNode parse_delimiter_stripped_argument(std::size_t cmd_offset) {
        if (cur().kind == MathTokenKind::Open) {
            const BracketKind bk = cur().bracket;
            const std::size_t at = cur().offset;
            ++pos_;
            auto inner = parse_seq({Terminator::CloseBracket, bk}, at);
            ++pos_;
            if (inner.empty()) fail("empty function argument", at);
            return make_seq(std::move(inner));
        }
        auto nodes = parse_atom();
        if (nodes.empty()) fail("missing function argument", cmd_offset);
        return make_seq(std::move(nodes));
    }

    AstNode parse_braced_or_atom(std::size_t cmd_offset, const char* what) {
        if (done()) fail(std::string("missing ") + what, cmd_offset);
        if (cur().kind == MathTokenKind::Open && cur().bracket == BracketKind::Brace) {
            const std::size_t at = cur().offset;
            ++pos_;
            auto inner = parse_seq({Terminator::CloseBracket, BracketKind::Brace}, at);
            ++pos_;
            if (inner.empty()) fail(std::string("empty ") + what, at);
            return make_seq(std::move(inner));
        }
        auto nodes = parse_atom();
        if (nodes.empty()) fail(std::string("missing ") + what, cmd_offset);
        return make_seq(std::move(nodes));
    }

    // Script argument: braces are delimiters and disappear; any other single
    // atom (including a lone operator, as in x^-) is taken as-is.
    AstNode parse_script_argument(std::size_t mark_offset) {
        if (done()) fail("script with no argument", mark_offset);
        const MathToken& t = cur();
        if (t.kind == MathTokenKind::Open && t.bracket == BracketKind::Brace) {
            const std::size_t at = t.offset;
            ++pos_;
            auto inner = parse_seq({Terminator::CloseBracket, BracketKind::Brace}, at);
            ++pos_;
            if (inner.empty()) fail("empty script argument", at);
            return make_seq(std::move(inner));
        }
        if (t.kind == MathTokenKind::Op) {
            ++pos_;
            return make_op(t.text);
        }
        auto nodes = parse_atom();
        if (nodes.empty()) fail("script with no argument", mark_offset);
        return make_seq(std::move(nodes));
    }

    // u_t then ^2 melds into one Script node; a filled slot starts a new one.
    static AstNode attach_script(AstNode base, bool is_sup, AstNode arg) {
        if (base.kind == NodeKind::Script && (is_sup ? !base.has_sup : !base.has_sub)) {
            if (is_sup) {
                base.has_sup = true;
                base.children.push_back(std::move(arg));
            } else {
                base.has_sub = true;
                base.children.insert(base.children.begin() + 1, std::move(arg));
            }
            return base;
        }
        if (is_sup) return make_script(std::move(base), nullptr, &arg);
        return make_script(std::move(base), &arg, nullptr);
    }
};

}  // namespace

FormulaAst parse_formula(const std::vector<MathToken>& tokens) {
    return Parser(tokens).run();
}

FormulaAst parse_formula(std::string_view source) {
    return parse_formula(lex_formula(source));
}

}  // namespace simdex
