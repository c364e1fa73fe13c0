#include "doctest.h"

#include <string>
#include <vector>

#include "simdex/config.hpp"
#include "simdex/errors.hpp"
#include "simdex/formula_match.hpp"
#include "simdex/math_parser.hpp"
#include "simdex/text_match.hpp"

using namespace simdex;

namespace {
AstNode P(std::string_view s) { return parse_formula(s); }

std::vector<std::string> W(std::initializer_list<const char*> ws) {
    return std::vector<std::string>(ws.begin(), ws.end());
}
}  // namespace

TEST_CASE("strict equality is structural identity") {
    CHECK(strict_equal(P("y = ax + b"), P("y = ax + b")));
    CHECK(strict_equal(P("y=ax+b"), P("y = ax + b")));  // whitespace-insensitive
    CHECK_FALSE(strict_equal(P("y = ax + b"), P("y = ax + c")));
    CHECK_FALSE(strict_equal(P("y = ax + b"), P("y = ax - b")));
    CHECK_FALSE(strict_equal(P("(a+b)c"), P("[a+b]c")));
    CHECK_FALSE(strict_equal(P("x_2"), P("x^2")));
    CHECK_FALSE(strict_equal(P("2x"), P("x2")));  // leaf order matters
}

TEST_CASE("alpha canonical renames identifiers in first-occurrence order") {
    AstNode expected = make_seq({make_ident("v1"), make_op("="), make_ident("v2"), make_op("+"),
                                 make_ident("v3")});
    CHECK(alpha_canonical(P("y = a + b")) == expected);
    // Repeats reuse the earlier name.
    AstNode rep = make_seq({make_ident("v1"), make_op("+"), make_ident("v2"), make_op("+"),
                            make_ident("v1")});
    CHECK(alpha_canonical(P("x + y + x")) == rep);
    // Canonicalizing twice changes nothing.
    auto once = alpha_canonical(P("f = g(qt) + \\alpha"));
    CHECK(alpha_canonical(once) == once);
    // Numbers, operators and function names keep their spelling.
    AstNode v1 = make_ident("v1");
    CHECK(alpha_canonical(P("\\bar{u}")) == make_func("bar", &v1));
    CHECK(alpha_canonical(P("2x")) ==
          make_seq({make_number("2"), make_ident("v1")}));
}

TEST_CASE("alpha equality is equality up to bijective renaming") {
    CHECK(alpha_equal(P("x + y"), P("y + x")));
    CHECK(alpha_equal(P("x + y"), P("a + b")));
    CHECK_FALSE(alpha_equal(P("x + x"), P("x + y")));  // renaming must stay a function
    CHECK_FALSE(alpha_equal(P("a + b"), P("b + b")));  // ...and injective
    CHECK(alpha_equal(P("u_t"), P("w_s")));
    CHECK_FALSE(alpha_equal(P("u_t"), P("u_u")));
    // Greek and Latin letters draw from the same renaming pool.
    CHECK(alpha_equal(P("\\alpha + x"), P("x + y")));
    // Non-identifier leaves must agree literally.
    CHECK_FALSE(alpha_equal(P("2x"), P("3y")));
    CHECK(alpha_equal(P("2x"), P("2y")));
    CHECK_FALSE(alpha_equal(P("\\sin x"), P("\\cos y")));
    CHECK_FALSE(alpha_equal(P("x + y"), P("x - y")));
    // Strict equality implies alpha equality.
    CHECK(alpha_equal(P("y = ax + b"), P("y = ax + b")));
}

TEST_CASE("formulas_equal dispatches on mode") {
    CHECK_FALSE(formulas_equal(P("y = a + bx^{-1/2}"), P("z = c + dy^{-1/2}"), MatchMode::Strict));
    CHECK(formulas_equal(P("y = a + bx^{-1/2}"), P("z = c + dy^{-1/2}"), MatchMode::Alpha));
    CHECK(formulas_equal(P("u_t = u"), P("u_t = u"), MatchMode::Strict));
}

TEST_CASE("match_formulas is existential and whole-unit") {
    std::vector<AstNode> a, b;
    a.push_back(P("x + y"));
    a.push_back(P("a \\cdot b"));
    a.push_back(P("q'"));
    b.push_back(P("p + q"));
    b.push_back(P("zzz"));
    b.push_back(P("c \\cdot d"));

    auto alpha = match_formulas(a, b, MatchMode::Alpha);
    REQUIRE(alpha.size() == 3);
    CHECK(alpha[0] == std::size_t{0});
    CHECK(alpha[1] == std::size_t{2});
    CHECK_FALSE(alpha[2].has_value());

    auto strict = match_formulas(a, b, MatchMode::Strict);
    CHECK_FALSE(strict[0].has_value());
    CHECK_FALSE(strict[1].has_value());
    CHECK_FALSE(strict[2].has_value());

    // One B formula may serve several A formulas; the first hit wins.
    std::vector<AstNode> many, one;
    many.push_back(P("x"));
    many.push_back(P("y"));
    one.push_back(P("w"));
    one.push_back(P("w + w"));
    auto dup = match_formulas(many, one, MatchMode::Alpha);
    CHECK(dup[0] == std::size_t{0});
    CHECK(dup[1] == std::size_t{0});
}

TEST_CASE("the legacy fragment metric rewards shared letters, not shared formulas") {
    // One changed subscript still leaves seven of eight leaves shared.
    CHECK(baseline_fragment_index(P("u_t = a u_{xx}"), P("u_{tt} = a u_{xx}")) ==
          doctest::Approx(87.5));
    // In the reverse direction every reference leaf is covered: 100% for
    // formulas that are plainly different — the failure the whole-unit
    // matcher is built to avoid.
    CHECK(baseline_fragment_index(P("u_{tt} = a u_{xx}"), P("u_t = a u_{xx}")) ==
          doctest::Approx(100.0));
    CHECK_FALSE(formulas_equal(P("u_t = a u_{xx}"), P("u_{tt} = a u_{xx}"), MatchMode::Alpha));

    CHECK(baseline_fragment_index(P("a + b"), P("x \\cdot y")) == 0.0);
    CHECK(baseline_fragment_index(P("k = m"), P("k = m")) == 100.0);
    // The metric is structure-blind: brackets and order add nothing.
    CHECK(baseline_fragment_index(P("(b + a)"), P("a + b")) == 100.0);
    // A reference with no leaves scores zero rather than dividing by zero.
    CHECK(baseline_fragment_index(P("x"), make_seq({})) == 0.0);
}

TEST_CASE("stop-term dictionaries parse, fold, dedupe and sort longest-first") {
    auto dict = StopTermDictionary::from_text(
        "# comment line\n"
        "Решение\n"
        "задачи коши\n"
        "\n"
        "решение   # same entry again\n");
    REQUIRE(dict.entries.size() == 2);
    CHECK(dict.entries[0] == W({"задачи", "коши"}));  // longest first
    CHECK(dict.entries[1] == W({"решение"}));

    CHECK(StopTermDictionary{}.empty());
    CHECK_FALSE(dict.empty());

    CHECK_THROWS_AS(StopTermDictionary::from_text("a b c d e f g h i\n"), ConfigError);
}

TEST_CASE("stop terms mask exact occurrences only — no stemming") {
    auto dict = StopTermDictionary::from_text("решение\nзадачи коши\n");

    auto flags = apply_stop_terms(W({"найдено", "решение", "задачи", "коши"}), dict);
    CHECK(flags == std::vector<bool>{false, true, true, true});

    // The singular form is a different token and stays retained.
    auto singular = apply_stop_terms(W({"решение", "задача", "коши"}), dict);
    CHECK(singular == std::vector<bool>{true, false, false});
}

TEST_CASE("stop-term occurrences prefer the longest entry and never overlap") {
    StopTermDictionary dict;
    dict.add("a");
    dict.add("a b");
    auto flags = apply_stop_terms(W({"a", "b", "a"}), dict);
    CHECK(flags == std::vector<bool>{true, true, true});  // "a b" then "a"

    StopTermDictionary two;
    two.add("a b");
    two.add("b c");
    // "a b" claims tokens 0-1; the leftover "c" alone matches nothing.
    CHECK(apply_stop_terms(W({"a", "b", "c"}), two) ==
          std::vector<bool>{true, true, false});
}

TEST_CASE("the default dictionary masks fixed phrases in running text") {
    // для уравнения лапласа задача коши некорректна однако метод фурье и
    // автомодельное решение дают представление о поведении решения
    auto words = W({"для", "уравнения", "лапласа", "задача", "коши", "некорректна", "однако",
                    "метод", "фурье", "и", "автомодельное", "решение", "дают", "представление",
                    "о", "поведении", "решения"});
    const auto& dict = default_stop_terms();
    auto flags = apply_stop_terms(words, dict);

    // Independent check: scan every dictionary entry against every position.
    std::vector<bool> expected(words.size(), false);
    for (std::size_t i = 0; i < words.size();) {
        std::size_t hit = 0;
        for (const auto& entry : dict.entries) {
            if (entry.size() <= words.size() - i &&
                std::equal(entry.begin(), entry.end(), words.begin() + i)) {
                hit = entry.size();
                break;  // entries are sorted longest first
            }
        }
        if (hit) {
            for (std::size_t k = 0; k < hit; ++k) expected[i + k] = true;
            i += hit;
        } else {
            ++i;
        }
    }
    CHECK(flags == expected);

    // Pinned content: "задача коши", "метод фурье" and "автомодельное
    // решение" are masked; the inflected "уравнения лапласа" is not.
    CHECK(flags == std::vector<bool>{false, false, false, true, true, false, false, true, true,
                                     false, true, true, false, false, false, false, false});
}

TEST_CASE("find_matched_runs returns exactly the maximal shared runs") {
    auto runs = find_matched_runs({{"x", "y", "x", "y", "x"}}, {{"x", "y", "x"}}, 2);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].a_chunk == 0);
    CHECK(runs[0].a_begin == 0);
    CHECK(runs[0].a_end == 3);
    CHECK(runs[1].a_begin == 2);
    CHECK(runs[1].a_end == 5);
    // Both copies point at the one occurrence of "x y x" in B.
    for (const auto& r : runs) {
        CHECK(r.b_chunk == 0);
        CHECK(r.b_begin == 0);
    }
    CHECK(matched_token_count(runs) == 5);  // overlapping runs cover 0..4 once
}

TEST_CASE("runs never cross chunk boundaries") {
    // Split A: each half matches inside the single B chunk.
    auto split_a = find_matched_runs({{"a", "b"}, {"c", "d"}}, {{"a", "b", "c", "d"}}, 2);
    REQUIRE(split_a.size() == 2);
    CHECK(split_a[0].a_chunk == 0);
    CHECK(split_a[1].a_chunk == 1);
    CHECK(matched_token_count(split_a) == 4);

    // Split B: "b c" straddles the B boundary, so only the halves match.
    auto split_b = find_matched_runs({{"a", "b", "c", "d"}}, {{"a", "b"}, {"c", "d"}}, 2);
    REQUIRE(split_b.size() == 2);
    CHECK(split_b[0].a_begin == 0);
    CHECK(split_b[0].a_end == 2);
    CHECK(split_b[0].b_chunk == 0);
    CHECK(split_b[1].a_begin == 2);
    CHECK(split_b[1].a_end == 4);
    CHECK(split_b[1].b_chunk == 1);

    // At L=3 nothing spans three tokens inside one B chunk.
    CHECK(find_matched_runs({{"a", "b", "c", "d"}}, {{"a", "b"}, {"c", "d"}}, 3).empty());
}

TEST_CASE("run finding edge cases") {
    CHECK(find_matched_runs({{"a", "b"}}, {}, 1).empty());
    CHECK(find_matched_runs({}, {{"a"}}, 1).empty());
    CHECK(find_matched_runs({{"a"}}, {{"b"}}, 1).empty());
    // The threshold is inclusive.
    CHECK(find_matched_runs({{"a", "b"}}, {{"a", "b"}}, 2).size() == 1);
    CHECK(find_matched_runs({{"a", "b"}}, {{"a", "b"}}, 3).empty());
    // A run reports a real occurrence at the stated B position.
    auto runs = find_matched_runs({{"p", "q", "r"}}, {{"z", "p", "q", "r"}}, 3);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].b_begin == 1);
}

TEST_CASE("matched_token_count merges overlaps per chunk") {
    std::vector<TokenRun> runs;
    runs.push_back({0, 0, 10, 0, 0});
    runs.push_back({0, 5, 15, 0, 0});
    CHECK(matched_token_count(runs) == 15);
    runs.push_back({1, 0, 3, 0, 0});
    CHECK(matched_token_count(runs) == 18);
    CHECK(matched_token_count({}) == 0);
}
