#include "simdex/math_ast.hpp"

#include <utility>

namespace simdex {

AstNode make_ident(std::string letter) {
    AstNode n;
    n.kind = NodeKind::Ident;
    n.text = std::move(letter);
    return n;
}

AstNode make_number(std::string digits) {
    AstNode n;
    n.kind = NodeKind::Number;
    n.text = std::move(digits);
    return n;
}

AstNode make_op(std::string symbol) {
    AstNode n;
    n.kind = NodeKind::Op;
    n.text = std::move(symbol);
    return n;
}

AstNode make_opaque(std::string raw) {
    AstNode n;
    n.kind = NodeKind::Opaque;
    n.text = std::move(raw);
    return n;
}

AstNode make_meta(std::string name) {
    AstNode n;
    n.kind = NodeKind::Meta;
    n.text = std::move(name);
    return n;
}

AstNode make_seq(std::vector<AstNode> children) {
    if (children.size() == 1) return std::move(children.front());
    AstNode n;
    n.kind = NodeKind::Seq;
    n.children = std::move(children);
    return n;
}

AstNode make_group(BracketKind bracket, AstNode child) {
    AstNode n;
    n.kind = NodeKind::Group;
    n.bracket = bracket;
    n.children.push_back(std::move(child));
    return n;
}

AstNode make_abs(AstNode child) {
    AstNode n;
    n.kind = NodeKind::AbsGroup;
    n.children.push_back(std::move(child));
    return n;
}

AstNode make_script(AstNode base, const AstNode* sub, const AstNode* sup) {
    AstNode n;
    n.kind = NodeKind::Script;
    n.children.push_back(std::move(base));
    if (sub) {
        n.has_sub = true;
        n.children.push_back(*sub);
    }
    if (sup) {
        n.has_sup = true;
        n.children.push_back(*sup);
    }
    return n;
}

AstNode make_frac(AstNode numerator, AstNode denominator) {
    AstNode n;
    n.kind = NodeKind::Frac;
    n.children.push_back(std::move(numerator));
    n.children.push_back(std::move(denominator));
    return n;
}

AstNode make_func(std::string name, const AstNode* argument) {
    AstNode n;
    n.kind = NodeKind::Func;
    n.text = std::move(name);
    if (argument) n.children.push_back(*argument);
    return n;
}

AstNode make_prime(AstNode base, int count) {
    AstNode n;
    n.kind = NodeKind::Prime;
    n.prime_count = count;
    n.children.push_back(std::move(base));
    return n;
}

long long leaf_count(const AstNode& node) {
    switch (node.kind) {
        case NodeKind::Ident:
        case NodeKind::Number:
        case NodeKind::Op:
        case NodeKind::Opaque:
        case NodeKind::Meta:
            return 1;
        case NodeKind::Func: {
            long long total = 1;  // the function name itself
            for (const auto& c : node.children) total += leaf_count(c);
            return total;
        }
        default: {
            long long total = 0;
            for (const auto& c : node.children) total += leaf_count(c);
            return total;
        }
    }
}

static void collect_leaves(const AstNode& node, std::map<std::string, long long>& out) {
    switch (node.kind) {
        case NodeKind::Ident:  out["I:" + node.text] += 1; return;
        case NodeKind::Number: out["N:" + node.text] += 1; return;
        case NodeKind::Op:     out["O:" + node.text] += 1; return;
        case NodeKind::Opaque: out["Q:" + node.text] += 1; return;
        case NodeKind::Meta:   out["M:" + node.text] += 1; return;
        case NodeKind::Func:   out["F:" + node.text] += 1; break;
        default: break;
    }
    for (const auto& c : node.children) collect_leaves(c, out);
}

std::map<std::string, long long> leaf_multiset(const AstNode& node) {
    std::map<std::string, long long> out;
    collect_leaves(node, out);
    return out;
}

static void key_rec(const AstNode& n, std::string& out) {
    static const char* tags = "SINOGAXCFPQM";  // indexed by NodeKind
    out.push_back(tags[static_cast<int>(n.kind)]);
    if (n.kind == NodeKind::Group) out.push_back("psb"[static_cast<int>(n.bracket)]);
    if (n.kind == NodeKind::Script) {
        out.push_back(n.has_sub ? '_' : '.');
        out.push_back(n.has_sup ? '^' : '.');
    }
    if (n.kind == NodeKind::Prime) out += std::to_string(n.prime_count);
    // Length-prefixed text keeps the encoding injective whatever the payload.
    out += std::to_string(n.text.size());
    out.push_back(':');
    out += n.text;
    out.push_back('(');
    for (const auto& c : n.children) key_rec(c, out);
    out.push_back(')');
}

std::string ast_key(const AstNode& node) {
    std::string out;
    out.reserve(64);
    key_rec(node, out);
    return out;
}

void for_each_child(const AstNode& node, const std::function<void(const AstNode&)>& fn) {
    for (const auto& c : node.children) fn(c);
}

}  // namespace simdex
