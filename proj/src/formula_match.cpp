#include "simdex/formula_match.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

namespace simdex {

namespace {

void canonicalize_idents(AstNode& node, std::map<std::string, std::string>& names) {
    if (node.kind == NodeKind::Ident) {
        // Children are stored in traversal order, so plain recursion is the
        // pre-order the canonical numbering is defined over.
        std::string fresh = "v" + std::to_string(names.size() + 1);
        auto [it, inserted] = names.emplace(node.text, std::move(fresh));
        node.text = it->second;
    }
    for (auto& c : node.children) canonicalize_idents(c, names);
}

}  // namespace

bool strict_equal(const AstNode& a, const AstNode& b) { return a == b; }

AstNode alpha_canonical(AstNode ast) {
    std::map<std::string, std::string> names;
    canonicalize_idents(ast, names);
    return ast;
}

bool alpha_equal(const AstNode& a, const AstNode& b) {
    return alpha_canonical(a) == alpha_canonical(b);
}

bool formulas_equal(const AstNode& a, const AstNode& b, MatchMode mode) {
    return mode == MatchMode::Strict ? strict_equal(a, b) : alpha_equal(a, b);
}

std::vector<std::optional<std::size_t>> match_formulas(const std::vector<AstNode>& a,
                                                       const std::vector<AstNode>& b,
                                                       MatchMode mode) {
    auto key_of = [mode](const AstNode& n) {
        return mode == MatchMode::Alpha ? ast_key(alpha_canonical(n)) : ast_key(n);
    };
    std::unordered_map<std::string, std::size_t> first_in_b;
    for (std::size_t j = 0; j < b.size(); ++j) first_in_b.emplace(key_of(b[j]), j);

    std::vector<std::optional<std::size_t>> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto it = first_in_b.find(key_of(a[i]));
        if (it != first_in_b.end()) out[i] = it->second;
    }
    return out;
}

double baseline_fragment_index(const AstNode& candidate, const AstNode& reference) {
    auto ref = leaf_multiset(reference);
    auto cand = leaf_multiset(candidate);
    long long total = 0, shared = 0;
    for (const auto& [token, count] : ref) {
        total += count;
        auto it = cand.find(token);
        if (it != cand.end()) shared += std::min(count, it->second);
    }
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(shared) / static_cast<double>(total);
}

}  // namespace simdex
