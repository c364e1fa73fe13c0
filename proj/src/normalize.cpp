#include "simdex/normalize.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "simdex/errors.hpp"
#include "simdex/math_parser.hpp"

namespace simdex {

namespace {

constexpr int kMaxPasses = 100;
constexpr int kMaxFiringsPerNode = 64;

// \1..\9 arrive from the parser as unknown-command opaques.
void opaque_digits_to_metas(AstNode& node) {
    if (node.kind == NodeKind::Opaque && node.text.size() == 1 &&
        node.text[0] >= '1' && node.text[0] <= '9') {
        node.kind = NodeKind::Meta;
    }
    for (auto& c : node.children) opaque_digits_to_metas(c);
}

void collect_metas(const AstNode& node, std::set<std::string>& out) {
    if (node.kind == NodeKind::Meta) out.insert(node.text);
    for (const auto& c : node.children) collect_metas(c, out);
}

using Bindings = std::map<std::string, const AstNode*>;

bool match(const AstNode& pat, const AstNode& node, Bindings& binds) {
    if (pat.kind == NodeKind::Meta) {
        auto [it, fresh] = binds.emplace(pat.text, &node);
        return fresh || *it->second == node;
    }
    if (pat.kind != node.kind || pat.text != node.text) return false;
    if (pat.bracket != node.bracket || pat.prime_count != node.prime_count) return false;
    if (pat.has_sub != node.has_sub || pat.has_sup != node.has_sup) return false;
    if (pat.children.size() != node.children.size()) return false;
    for (std::size_t i = 0; i < pat.children.size(); ++i)
        if (!match(pat.children[i], node.children[i], binds)) return false;
    return true;
}

AstNode substitute(const AstNode& repl, const Bindings& binds) {
    if (repl.kind == NodeKind::Meta) return *binds.at(repl.text);
    AstNode out = repl;
    out.children.clear();
    for (const auto& c : repl.children) out.children.push_back(substitute(c, binds));
    return out;
}

AstNode rewrite_once(AstNode node, const std::vector<RewriteRule>& rules, bool& changed) {
    for (auto& c : node.children) c = rewrite_once(std::move(c), rules, changed);
    int firings = 0;
    bool fired = true;
    while (fired) {
        fired = false;
        for (const auto& r : rules) {
            Bindings binds;
            if (!match(r.pattern, node, binds)) continue;
            AstNode next = substitute(r.replacement, binds);
            if (next == node) break;  // identity rule; leave it be
            if (++firings > kMaxFiringsPerNode)
                throw ConfigError("rewrite rules do not terminate");
            node = std::move(next);
            changed = true;
            fired = true;
            break;
        }
    }
    return node;
}

std::size_t node_count(const AstNode& node) {
    std::size_t total = 1;
    for (const auto& c : node.children) total += node_count(c);
    return total;
}

AstNode parse_rule_side(std::string_view src, std::size_t line_no, const char* side) {
    try {
        AstNode ast = parse_formula(src);
        opaque_digits_to_metas(ast);
        return ast;
    } catch (const FormulaError& e) {
        throw ConfigError("rule line " + std::to_string(line_no) + ", " + side + ": " +
                          e.what());
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<RewriteRule> parse_rewrite_rules(std::string_view text) {
    std::vector<RewriteRule> rules;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        std::size_t sep = line.find("=>");
        if (sep == std::string_view::npos)
            throw ConfigError("rule line " + std::to_string(line_no) + ": missing \"=>\"");

        RewriteRule rule;
        rule.pattern = parse_rule_side(trim(line.substr(0, sep)), line_no, "pattern");
        rule.replacement = parse_rule_side(trim(line.substr(sep + 2)), line_no, "replacement");

        std::set<std::string> pat_metas, repl_metas;
        collect_metas(rule.pattern, pat_metas);
        collect_metas(rule.replacement, repl_metas);
        for (const auto& m : repl_metas)
            if (!pat_metas.count(m))
                throw ConfigError("rule line " + std::to_string(line_no) + ": \\" + m +
                                  " appears only in the replacement");

        rules.push_back(std::move(rule));
    }
    return rules;
}

const std::vector<RewriteRule>& default_rewrite_rules() {
    static const std::vector<RewriteRule> table = parse_rewrite_rules("e^{\\1} => \\exp{\\1}");
    return table;
}

FormulaAst apply_rewrite_rules(FormulaAst ast, const std::vector<RewriteRule>& rules) {
    if (rules.empty()) return ast;
    // A rule set that keeps enlarging the tree (x => xx) would exhaust memory long
    // before the pass cap trips, so growth past a generous multiple of the input
    // size is treated as non-termination too.
    const std::size_t size_cap = std::max<std::size_t>(4096, 64 * node_count(ast));
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        bool changed = false;
        ast = rewrite_once(std::move(ast), rules, changed);
        if (!changed) return ast;
        if (node_count(ast) > size_cap)
            throw ConfigError("rewrite rules do not terminate");
    }
    throw ConfigError("rewrite rules do not terminate");
}

}  // namespace simdex
