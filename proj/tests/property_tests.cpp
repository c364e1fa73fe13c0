#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "simdex/config.hpp"
#include "simdex/document.hpp"
#include "simdex/formula_match.hpp"
#include "simdex/math_ast.hpp"
#include "simdex/similarity.hpp"
#include "simdex/text_match.hpp"

#include "support/test_support.hpp"

using namespace simdex;
using namespace test_support;

TEST_CASE("alpha-equivalence laws hold on random formula trees") {
    std::mt19937 rng(990101);
    for (int trial = 0; trial < 1000; ++trial) {
        AstNode t = random_ast(rng, 3);

        CAPTURE(ast_key(t));
        CHECK(alpha_equal(t, t));  // reflexive

        const AstNode ct = alpha_canonical(t);
        CHECK(alpha_canonical(ct) == ct);        // idempotent
        CHECK(leaf_count(ct) == leaf_count(t));  // renaming keeps weight

        std::set<std::string> names;
        collect_idents(t, names);
        const auto subst = random_bijection(names, rng);
        const AstNode u = rename_idents(t, subst);

        CHECK(alpha_equal(t, u));  // invariance under bijective renaming
        CHECK(alpha_equal(u, t));  // symmetric
        CHECK(alpha_canonical(u) == ct);
        if (!is_identity(subst)) CHECK_FALSE(strict_equal(t, u));

        // A renaming of the renaming: transitivity closes the chain.
        std::set<std::string> names2;
        collect_idents(u, names2);
        const AstNode w = rename_idents(u, random_bijection(names2, rng));
        CHECK(alpha_equal(t, w));

        // Against an unrelated tree, strict equality implies alpha equality.
        const AstNode s = random_ast(rng, 3);
        if (strict_equal(t, s)) CHECK(alpha_equal(t, s));
        if (!alpha_equal(t, s)) CHECK_FALSE(strict_equal(t, s));
    }
}

TEST_CASE("collapsing two identifier names breaks equality in both modes") {
    std::mt19937 rng(443322);
    int effective = 0;
    for (int trial = 0; trial < 600; ++trial) {
        AstNode t = random_ast(rng, 3);
        std::set<std::string> names;
        collect_idents(t, names);
        if (names.size() < 2) continue;
        ++effective;

        const std::string from = *names.begin();
        const std::string to = *std::next(names.begin());
        const AstNode u = rename_idents(t, {{from, to}});

        CAPTURE(ast_key(t));
        CHECK_FALSE(strict_equal(t, u));
        CHECK_FALSE(alpha_equal(t, u));  // the map is not injective
        CHECK_FALSE(formulas_equal(t, u, MatchMode::Strict));
        CHECK_FALSE(formulas_equal(t, u, MatchMode::Alpha));
    }
    CHECK(effective >= 200);  // the generator must actually exercise the law
}

TEST_CASE("the run finder agrees with the literal maximality definition") {
    std::mt19937 rng(775599);
    for (int trial = 0; trial < 150; ++trial) {
        const int vocab = std::uniform_int_distribution<int>(3, 8)(rng);
        const auto a = random_chunks(rng, 4, 25, vocab);
        const auto b = related_chunks(a, rng, vocab);
        const int min_len = std::uniform_int_distribution<int>(1, 6)(rng);

        const auto runs = find_matched_runs(a, b, min_len);
        const auto expected = oracle_runs(a, b, min_len);

        std::vector<OracleRun> got;
        for (const auto& r : runs) {
            got.push_back({r.a_chunk, r.a_begin, r.a_end});
            // The reported B location is a genuine occurrence.
            REQUIRE(r.b_chunk < b.size());
            const std::size_t len = r.a_end - r.a_begin;
            REQUIRE(r.b_begin + len <= b[r.b_chunk].size());
            CHECK(std::equal(a[r.a_chunk].begin() + static_cast<std::ptrdiff_t>(r.a_begin),
                             a[r.a_chunk].begin() + static_cast<std::ptrdiff_t>(r.a_end),
                             b[r.b_chunk].begin() + static_cast<std::ptrdiff_t>(r.b_begin)));
        }
        std::sort(got.begin(), got.end());
        CAPTURE(trial);
        CHECK(got == expected);
        CHECK(matched_token_count(runs) == oracle_matched_count(expected, a));
    }
}

TEST_CASE("raising the run threshold never matches more tokens") {
    std::mt19937 rng(13579);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_chunks(rng, 3, 30, 4);
        const auto b = related_chunks(a, rng, 4);
        const int low = std::uniform_int_distribution<int>(1, 5)(rng);
        const int high = low + std::uniform_int_distribution<int>(1, 4)(rng);
        CHECK(matched_token_count(find_matched_runs(a, b, high)) <=
              matched_token_count(find_matched_runs(a, b, low)));
    }
}

TEST_CASE("masking stop terms never raises the matched or total word count") {
    std::mt19937 rng(8642);
    static const char* vocab[] = {"solution", "boundary", "estimate", "profile",
                                  "operator", "decay",    "wave",     "kernel"};
    for (int trial = 0; trial < 100; ++trial) {
        const std::string sa = random_document(rng, 4, false);
        const std::string sb =
            trial % 2 == 0 ? sa : random_document(rng, 3, false);
        EngineConfig cfg;  // no masking, no zones, no rewriting
        const auto da = parse_document(sa, cfg, "a");
        const auto db = parse_document(sb, cfg, "b");

        StopTermDictionary dict;
        const int entries = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int e = 0; e < entries; ++e) {
            std::string term = vocab[rng() % 8];
            if (rng() % 2 == 0) term += std::string(" ") + vocab[rng() % 8];
            dict.add(term);
        }

        const auto masked = variant3_index(da, db, MatchMode::Strict, Weights{}, dict, 8);
        const auto plain =
            variant3_index(da, db, MatchMode::Strict, Weights{}, StopTermDictionary{}, 8);
        CHECK(masked.text.matched <= plain.text.matched);
        CHECK(masked.text.total <= plain.text.total);
        // The other channels are untouched by masking.
        CHECK(masked.formula.matched == plain.formula.matched);
        CHECK(masked.formula.total == plain.formula.total);
    }
}

TEST_CASE("every variant is reflexive on generated documents") {
    std::mt19937 rng(24680);
    for (int trial = 0; trial < 20; ++trial) {
        const std::string src = random_document(rng, 4, trial % 2 == 0);
        EngineConfig cfg;
        const auto d = parse_document(src, cfg, "gen");

        if (d.formula_leaf_count() > 0) {
            CHECK(variant1_index(d, d, MatchMode::Strict).index == 100.0);
            CHECK(variant1_index(d, d, MatchMode::Alpha).index == 100.0);
        }
        CHECK(variant2_index(d, d, MatchMode::Strict, Weights{}).index == 100.0);
        // Generated sentences always reach the default minimum run length,
        // so the strictest variant is reflexive here as well.
        CHECK(variant3_index(d, d, MatchMode::Strict, Weights{}, StopTermDictionary{}, 8).index ==
              100.0);
    }
}

TEST_CASE("scaling both weights by a common factor leaves the index exactly unchanged") {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 30; ++trial) {
        const std::string sa = random_document(rng, 3, true);
        const std::string sb = trial % 2 == 0 ? sa : random_document(rng, 3, true);
        EngineConfig cfg;
        const auto da = parse_document(sa, cfg, "a");
        const auto db = parse_document(sb, cfg, "b");

        for (MatchMode mode : {MatchMode::Strict, MatchMode::Alpha}) {
            const double base2 = variant2_index(da, db, mode, Weights{1.0, 7.0}).index;
            const double base3 =
                variant3_index(da, db, mode, Weights{1.0, 7.0}, StopTermDictionary{}, 8).index;
            for (double k : {2.0, 3.0, 7.0}) {
                const Weights w{k, 7.0 * k};
                CHECK(variant2_index(da, db, mode, w).index == base2);
                CHECK(variant3_index(da, db, mode, w, StopTermDictionary{}, 8).index == base3);
            }
        }
    }
}

TEST_CASE("word offsets are invariant under the tokenizer base") {
    std::mt19937 rng(27182);
    static const char* pieces[] = {"alpha",  ", ",  "beta",  ". ",   "gamma (", "delta)",
                                   " — ",    "u21", "\n",    "mid-", "dot",     "; "};
    for (int trial = 0; trial < 50; ++trial) {
        std::string s;
        const int n = std::uniform_int_distribution<int>(1, 20)(rng);
        for (int i = 0; i < n; ++i) s += pieces[rng() % 12];

        const auto plain = tokenize_text(s);
        const auto based = tokenize_text(s, 1000);
        REQUIRE(plain.size() == based.size());
        for (std::size_t i = 0; i < plain.size(); ++i) {
            CHECK(plain[i].text == based[i].text);
            CHECK(plain[i].begin + 1000 == based[i].begin);
            CHECK(plain[i].end + 1000 == based[i].end);
            // Offsets really delimit the token in the source (ASCII input).
            CHECK(s.substr(plain[i].begin, plain[i].end - plain[i].begin) == plain[i].text);
        }
    }
}
