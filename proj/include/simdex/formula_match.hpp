#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "simdex/math_ast.hpp"

namespace simdex {

enum class MatchMode { Strict, Alpha };

// Structural identity: node kinds, leaf contents, bracket kinds, script
// placement all equal. Inputs are expected to be normalized already.
bool strict_equal(const AstNode& a, const AstNode& b);

// Rename identifier leaves to v1, v2, ... in order of first occurrence
// (pre-order). Numbers, operators, function names and brackets are left
// alone. Canonicalizing twice is the identity.
AstNode alpha_canonical(AstNode ast);

// Equality up to a bijective renaming of identifier letters.
bool alpha_equal(const AstNode& a, const AstNode& b);

bool formulas_equal(const AstNode& a, const AstNode& b, MatchMode mode);

// For each formula of A, the index of the first equal formula in B, if any.
// Matching is existential per A entry: one B formula may serve several A
// formulas. A formula either matches whole or not at all.
std::vector<std::optional<std::size_t>> match_formulas(const std::vector<AstNode>& a,
                                                       const std::vector<AstNode>& b,
                                                       MatchMode mode);

// LEGACY demonstration metric: fraction of the reference formula's leaf
// tokens (as a multiset) that also occur among the candidate's leaves,
// as a percentage over leaf_count(reference). This is the fragment-level
// counting the whole-unit matcher exists to replace; it is exposed only so
// reports can show the contrast.
double baseline_fragment_index(const AstNode& candidate, const AstNode& reference);

}  // namespace simdex
