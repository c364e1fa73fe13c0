#pragma once

#include <string_view>
#include <vector>

#include "simdex/math_ast.hpp"

namespace simdex {

// A rewrite rule "pattern => replacement". Both sides are ordinary formula
// syntax; \1..\9 act as metavariables that bind whole subtrees. A rule file
// holds one rule per line, blank lines and #-comments skipped.
struct RewriteRule {
    AstNode pattern;
    AstNode replacement;
};

// Throws ConfigError on malformed rules (bad syntax, a metavariable used in
// the replacement but absent from the pattern).
std::vector<RewriteRule> parse_rewrite_rules(std::string_view text);

// The built-in table: exponential notation is folded onto the function form,
// e^{...} => \exp{...}.
const std::vector<RewriteRule>& default_rewrite_rules();

// Bottom-up rewriting to a fixpoint. Same metavariable, same subtree; the
// first matching rule wins at each node. Tables that keep growing the tree
// instead of settling are reported as ConfigError.
FormulaAst apply_rewrite_rules(FormulaAst ast, const std::vector<RewriteRule>& rules);

}  // namespace simdex
