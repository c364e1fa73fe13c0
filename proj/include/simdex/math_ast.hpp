#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace simdex {

// ============================================================================
// Formula AST
// ============================================================================
//
// Structure is captured by node kinds; symbols live in leaves. Equality is
// symbol-for-symbol and structure-for-structure: there is no partial credit
// anywhere downstream, a formula either equals another one or it does not.
//
//   Seq      — juxtaposition, >= 1 child (singletons are collapsed away)
//   Ident    — a single letter (any alphabet the tokenizer accepts)
//   Number   — digit string, optional decimal point
//   Op       — one operator/punctuation symbol (+ - = / , . · | ' ...)
//   Group    — bracketed child; bracket kind (paren/square/brace) matters
//   AbsGroup — |child|
//   Script   — base with subscript and/or superscript (at least one present)
//   Frac     — two-child vertical fraction
//   Func     — named function/decorator applied to an optional argument;
//              the argument is stored without its delimiter, so \exp x,
//              \exp(x) and \exp{x} are one and the same application
//   Prime    — base with `count` prime marks (count >= 1)
//   Opaque   — raw text that only matches itself byte-for-byte (unknown
//              commands, unparseable formulas)
//   Meta     — wildcard; appears only inside rewrite-rule patterns
//
// Leaves are Ident, Number, Op, the Func *name*, Opaque and Meta. Brackets,
// bars, primes and script placement are structure, not leaves: they still
// separate formulas under equality, but do not add to leaf weight.

enum class NodeKind : std::uint8_t {
    Seq,
    Ident,
    Number,
    Op,
    Group,
    AbsGroup,
    Script,
    Frac,
    Func,
    Prime,
    Opaque,
    Meta,
};

enum class BracketKind : std::uint8_t { Paren, Square, Brace };

struct AstNode {
    NodeKind kind = NodeKind::Seq;
    std::string text;                  // Ident/Number/Op/Func-name/Opaque/Meta
    BracketKind bracket = BracketKind::Paren;  // Group only
    int prime_count = 0;               // Prime only
    bool has_sub = false;              // Script only
    bool has_sup = false;              // Script only
    std::vector<AstNode> children;

    bool operator==(const AstNode&) const = default;
};

using FormulaAst = AstNode;

// --- builders ---------------------------------------------------------------
AstNode make_ident(std::string letter);
AstNode make_number(std::string digits);
AstNode make_op(std::string symbol);
AstNode make_opaque(std::string raw);
AstNode make_meta(std::string name);
// Collapses a single-element sequence to its only node.
AstNode make_seq(std::vector<AstNode> children);
AstNode make_group(BracketKind bracket, AstNode child);
AstNode make_abs(AstNode child);
AstNode make_script(AstNode base, const AstNode* sub, const AstNode* sup);
AstNode make_frac(AstNode numerator, AstNode denominator);
AstNode make_func(std::string name, const AstNode* argument);
AstNode make_prime(AstNode base, int count);

// --- queries ----------------------------------------------------------------
long long leaf_count(const AstNode& node);

// Multiset of leaf values, each tagged by leaf kind so an identifier `x`
// and an opaque `x` stay distinct. Used by the legacy fragment baseline.
std::map<std::string, long long> leaf_multiset(const AstNode& node);

// Injective serialization; equal strings iff equal ASTs. Used as a hash key
// by the matcher and for readable assertions in tests.
std::string ast_key(const AstNode& node);

// Pre-order child walk shared by canonicalization and pattern code:
// Seq children left to right; Group/AbsGroup child; Script base, sub, sup;
// Frac numerator, denominator; Func argument; Prime base.
void for_each_child(const AstNode& node, const std::function<void(const AstNode&)>& fn);

}  // namespace simdex
