#pragma once

// Shared generators and reference implementations for the test suites.
// The reference implementations are deliberately naive — quadratic scans
// and literal definitions that are easy to audit — and the engine's
// optimized paths are required to agree with them exactly.

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "simdex/math_ast.hpp"

namespace test_support {

// ---------------------------------------------------------------------------
// Token streams
// ---------------------------------------------------------------------------

// Small vocabularies on purpose: repeated words are what stress run
// maximality and overlap handling.
inline std::vector<std::string> random_chunk(std::mt19937& rng, int max_len, int vocab) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> word(0, vocab - 1);
    std::vector<std::string> out(static_cast<std::size_t>(len(rng)));
    for (auto& w : out) w = "w" + std::to_string(word(rng));
    return out;
}

inline std::vector<std::vector<std::string>> random_chunks(std::mt19937& rng, int max_chunks,
                                                           int max_chunk_len, int vocab) {
    std::uniform_int_distribution<int> n(1, max_chunks);
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(n(rng)));
    for (auto& c : out) c = random_chunk(rng, max_chunk_len, vocab);
    return out;
}

// A stream related to `a`: some chunks are copied slices of a's chunks, so
// long shared runs actually occur; the rest is fresh noise.
inline std::vector<std::vector<std::string>> related_chunks(
    const std::vector<std::vector<std::string>>& a, std::mt19937& rng, int vocab) {
    std::vector<std::vector<std::string>> out;
    std::uniform_int_distribution<int> n(1, 4);
    std::uniform_int_distribution<int> coin(0, 1);
    const int count = n(rng);
    for (int i = 0; i < count; ++i) {
        if (coin(rng) == 0 && !a.empty()) {
            const auto& src = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
            if (!src.empty()) {
                std::uniform_int_distribution<std::size_t> b(0, src.size() - 1);
                std::size_t lo = b(rng), hi = b(rng);
                if (lo > hi) std::swap(lo, hi);
                out.emplace_back(src.begin() + static_cast<std::ptrdiff_t>(lo),
                                 src.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
                continue;
            }
        }
        out.push_back(random_chunk(rng, 40, vocab));
    }
    return out;
}

inline bool occurs_in_chunk(const std::vector<std::string>& chunk,
                            const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > chunk.size()) return needle.empty();
    for (std::size_t at = 0; at + needle.size() <= chunk.size(); ++at)
        if (std::equal(needle.begin(), needle.end(), chunk.begin() + static_cast<std::ptrdiff_t>(at)))
            return true;
    return false;
}

inline bool occurs_anywhere(const std::vector<std::vector<std::string>>& chunks,
                            const std::vector<std::string>& needle) {
    for (const auto& c : chunks)
        if (occurs_in_chunk(c, needle)) return true;
    return false;
}

struct OracleRun {
    std::size_t chunk = 0, begin = 0, end = 0;
    bool operator<(const OracleRun& o) const {
        return std::tie(chunk, begin, end) < std::tie(o.chunk, o.begin, o.end);
    }
    bool operator==(const OracleRun&) const = default;
};

// Literal definition of a maximal matched run: the slice occurs contiguously
// somewhere in B and cannot be extended by one token on either side. (A
// superset of a non-extendable run cannot occur either, since occurrence is
// closed under taking sub-slices.)
inline std::vector<OracleRun> oracle_runs(const std::vector<std::vector<std::string>>& a,
                                          const std::vector<std::vector<std::string>>& b,
                                          int min_run_length) {
    std::vector<OracleRun> out;
    const auto min_len = static_cast<std::size_t>(min_run_length);
    for (std::size_t c = 0; c < a.size(); ++c) {
        const auto& chunk = a[c];
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            for (std::size_t j = i + min_len; j <= chunk.size(); ++j) {
                std::vector<std::string> slice(chunk.begin() + static_cast<std::ptrdiff_t>(i),
                                               chunk.begin() + static_cast<std::ptrdiff_t>(j));
                if (!occurs_anywhere(b, slice)) continue;
                bool left_ok = i == 0;
                if (!left_ok) {
                    std::vector<std::string> wider(chunk.begin() + static_cast<std::ptrdiff_t>(i) - 1,
                                                   chunk.begin() + static_cast<std::ptrdiff_t>(j));
                    left_ok = !occurs_anywhere(b, wider);
                }
                bool right_ok = j == chunk.size();
                if (!right_ok) {
                    std::vector<std::string> wider(chunk.begin() + static_cast<std::ptrdiff_t>(i),
                                                   chunk.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                    right_ok = !occurs_anywhere(b, wider);
                }
                if (left_ok && right_ok) out.push_back({c, i, j});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline long long oracle_matched_count(const std::vector<OracleRun>& runs,
                                      const std::vector<std::vector<std::string>>& a) {
    long long total = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
        std::vector<bool> covered(a[c].size(), false);
        for (const auto& r : runs)
            if (r.chunk == c)
                for (std::size_t i = r.begin; i < r.end; ++i) covered[i] = true;
        for (bool bit : covered) total += bit ? 1 : 0;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Random formula ASTs
// ---------------------------------------------------------------------------

inline simdex::AstNode random_leaf(std::mt19937& rng) {
    static const std::string letters = "abcdefguvwxyzt";
    static const char* ops[] = {"+", "-", "=", "/", ",", "·"};
    switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0:
        case 1:
            return simdex::make_ident(std::string(
                1, letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)]));
        case 2:
            return simdex::make_number(
                std::to_string(std::uniform_int_distribution<int>(0, 12)(rng)));
        default:
            return simdex::make_op(ops[std::uniform_int_distribution<std::size_t>(0, 5)(rng)]);
    }
}

inline simdex::AstNode random_ast(std::mt19937& rng, int depth) {
    using simdex::AstNode;
    if (depth <= 0) return random_leaf(rng);
    auto child = [&] { return random_ast(rng, depth - 1); };
    switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
        case 0:
        case 1:
        case 2: {
            std::vector<AstNode> kids;
            const int n = std::uniform_int_distribution<int>(2, 4)(rng);
            for (int i = 0; i < n; ++i) kids.push_back(child());
            return simdex::make_seq(std::move(kids));
        }
        case 3: {
            auto kinds = {simdex::BracketKind::Paren, simdex::BracketKind::Square,
                          simdex::BracketKind::Brace};
            return simdex::make_group(
                *(kinds.begin() + std::uniform_int_distribution<int>(0, 2)(rng)), child());
        }
        case 4:
            return simdex::make_abs(child());
        case 5: {
            AstNode base = random_leaf(rng);
            AstNode sub = child(), sup = child();
            switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
                case 0: return simdex::make_script(std::move(base), &sub, nullptr);
                case 1: return simdex::make_script(std::move(base), nullptr, &sup);
                default: return simdex::make_script(std::move(base), &sub, &sup);
            }
        }
        case 6:
            return simdex::make_frac(child(), child());
        case 7: {
            static const char* names[] = {"sin", "cos", "exp", "ln", "bar"};
            AstNode arg = child();
            return simdex::make_func(names[std::uniform_int_distribution<int>(0, 4)(rng)], &arg);
        }
        case 8:
            return simdex::make_prime(random_leaf(rng),
                                      std::uniform_int_distribution<int>(1, 2)(rng));
        default:
            return random_leaf(rng);
    }
}

// ---------------------------------------------------------------------------
// Identifier renamings
// ---------------------------------------------------------------------------

inline void collect_idents(const simdex::AstNode& node, std::set<std::string>& out) {
    if (node.kind == simdex::NodeKind::Ident) out.insert(node.text);
    simdex::for_each_child(node,
                           [&out](const simdex::AstNode& child) { collect_idents(child, out); });
}

inline simdex::AstNode rename_idents(simdex::AstNode node,
                                     const std::map<std::string, std::string>& subst) {
    if (node.kind == simdex::NodeKind::Ident) {
        auto it = subst.find(node.text);
        if (it != subst.end()) node.text = it->second;
    }
    for (auto& child : node.children) child = rename_idents(std::move(child), subst);
    return node;
}

// A bijection from the formula's identifier letters into a disjoint-safe
// pool: targets are drawn without repetition from the shuffled pool, so
// distinct names stay distinct.
inline std::map<std::string, std::string> random_bijection(const std::set<std::string>& names,
                                                           std::mt19937& rng) {
    std::vector<std::string> pool;
    for (char c = 'a'; c <= 'z'; ++c) pool.emplace_back(1, c);
    for (const char* greek : {"α", "β", "γ", "δ", "λ", "μ"})
        pool.emplace_back(greek);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<std::string, std::string> subst;
    std::size_t next = 0;
    for (const auto& name : names) subst[name] = pool[next++];
    return subst;
}

inline bool is_identity(const std::map<std::string, std::string>& subst) {
    for (const auto& [from, to] : subst)
        if (from != to) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Random documents (valid input-format sources)
// ---------------------------------------------------------------------------

// Text sentences long enough to clear the default minimum run length, with
// formulas sprinkled between them; optionally a figure. Every generated
// document is a well-formed source.
inline std::string random_document(std::mt19937& rng, int sentence_count, bool with_figure) {
    static const char* vocab[] = {"solution", "boundary",  "estimate", "profile", "operator",
                                  "decay",    "travelling", "layer",    "wave",    "kernel",
                                  "bounded",  "uniform",   "integral", "norm",    "stable"};
    static const char* formulas[] = {"u_t = a u_{xx} + f(u)", "y'' + ay' + by = 0",
                                     "w = \\exp(kt) + c", "v_x = \\frac{p}{q} + v"};
    std::uniform_int_distribution<int> word(0, 14);
    std::uniform_int_distribution<int> sentence_len(9, 14);
    std::uniform_int_distribution<int> formula(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);

    std::string out;
    if (with_figure) {
        out += "![fig:gen digest=";
        for (int i = 0; i < 8; ++i) out += "0123456789abcdef"[rng() % 16];
        out += " area=0.25]\n\n";
    }
    for (int s = 0; s < sentence_count; ++s) {
        const int len = sentence_len(rng);
        for (int w = 0; w < len; ++w) {
            out += vocab[word(rng)];
            out += w + 1 == len ? "." : " ";
        }
        out += "\n\n";
        if (coin(rng) == 0) {
            out += "$";
            out += formulas[formula(rng)];
            out += "$\n\n";
        }
    }
    return out;
}

}  // namespace test_support
