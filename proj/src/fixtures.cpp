#include "simdex/fixtures.hpp"

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simdex/config.hpp"
#include "simdex/document.hpp"
#include "simdex/formula_match.hpp"
#include "simdex/math_parser.hpp"
#include "simdex/normalize.hpp"
#include "simdex/similarity.hpp"
#include "simdex/utf8.hpp"

namespace simdex::fixtures {
namespace {

// ---------------------------------------------------------------------------
// Embedded documents
// ---------------------------------------------------------------------------

// Two drafts of the same derivation note. Nearly all connective prose is
// shared; the equations differ throughout (a delayed-argument parabolic
// model vs a hyperbolic one). Fragment counting rates such pairs as largely
// identical; whole-unit matching must not.
constexpr std::string_view kTt1V1 = R"doc(Let us consider the pantograph-type parabolic equation with logarithmic nonlinearity

$u_t = au_{xx} + bu \ln \bar{u} + cu$ (i)

where $\bar{u} = u(px, qt)$ and $0 < p, q < 1$. We will now prove that equation (i) admits a multiplicative separable solution of the form

$u(x, t) = f(x)g(t)$ (ii)

Indeed, substituting expression (ii) into equation (i) and separating the variables, we get nonlinear pantograph-type ODEs describing the functions $f = f(x)$ and $g = g(t)$:

$af''_{xx} + bf \ln \bar{f} + kf = 0, \\ g'_t - bg \ln \bar{g} + (k - c)g = 0$

where k is an arbitrary constant, and $\bar{f} = f(px)$, $\bar{g} = g(qt)$.
)doc";

constexpr std::string_view kTt1V2 = R"doc(Let us consider the hyperbolic equation with logarithmic nonlinearity

$u_{tt} = au_{xx} + bu \ln u + cu$ (i)

We will now prove that equation (i) admits a multiplicative separable solution of the form

$u(x, t) = f(x)g(t)$ (ii)

Indeed, substituting expression (ii) into equation (i) and separating the variables, we get nonlinear ODEs describing the functions $f = f(x)$ and $g = g(t)$:

$af''_{xx} + bf \ln f + kf = 0, \\ g''_{tt} - bg \ln g + (k - c)g = 0$

where k is an arbitrary constant.
)doc";

// Thirty numbered equation rows per column. Row N of one column looks very
// close to row N of the other, yet no formula of either column equals any
// formula of the other — the discrimination benchmark for the whole-unit
// matcher.
constexpr std::string_view kTt2Left = R"doc(1 $y = a + x(b + x)$
2 $y = (a + x) \cdot (b + x)$
3 $g = 1 + z + f ^{1/2}$
4 $y = a + bx^{-1/2}$
5 $y = a + be^x$
6 $z = a \sin(x) - 2y$
7 $y_x = a + bex$
8 $y' = \exp(ax) - by + c$
9 $y' = axy + b(x)y^2$
10 $y' = a(x)y + b(x) \cdot y^2$
11 $y' = a(x)y + b(x)y^{k+1}$
12 $y'' = ay^2 + b$
13 $y'' = ay^2 + bx$
14 $y'' + e^x y' + f(y) = 0$
15 $y'' + ay' + by = 0$
16 $y'' + axy' + f(y) = 0$
17 $u_t = [f(x)u]_x + g(x)$
18 $u_t = f(u)u_{xx} + g(u)$
19 $u_t = f(u)u_{xx} + g(u_x)u$
20 $u_t = [f(u)u_x]_x + au_x$
21 $u_t = [f(x)u]_{xx} + g(u_x)$
22 $u_t = [f(x)u]_x + g(u)$
23 $u_t = [f(x)u]_x + g(u_x)$
24 $u_{tt} = [f(u)u_x]_x + g(u)$
25 $u_{tt} = [f(u)u_x]_x + au_x$
26 $u_{tt} = [f(u)u_x]_x + g(u_x)$
27 $u_{tt} = [f(u)u_x]_x + g(uu_x)$
28 $u_{tt} = [f(uu_x)]_x + g(u, u_x)$
29 $u_{xt} = [f(uu_x)]_x + g(u/u_x)$
30 $iu_t = au_{xx} + f(u)u$
)doc";

constexpr std::string_view kTt2Right = R"doc(1 $y = (a + x)(b + x)$
2 $y = (a + x)/(b + x)$
3 $g = (1 + z + f)^{1/2}$
4 $y = a + bx - 1/2$
5 $y = a + bex$
6 $z = a \sin(x - 2y)$
7 $yx = a + bex$
8 $y' = \exp(ax - by + c)$
9 $y' = a(x)y + b(x)y^2$
10 $y' = a(x)y + b(x)y^2 + 1$
11 $y' = a(x)y + b(x)y^k + 1$
12 $y'' = ay^2 + b + x$
13 $y'' = ay^2 + b(x)$
14 $y'' + exy' + f(y) = 0$
15 $y'' + ay' + b \cdot y = 0$
16 $y'' + a(xy)' + f(y) = 0$
17 $u_t = [f(x)u_x]_x + g(x)$
18 $u_t = [f(u)u_x]_x + g(u)$
19 $u_t = f(u)u_{xx} + g(u_x)/u$
20 $u_t = [f(u)u_x]_x + aux$
21 $u_t = [f(x)u_x]_x + g(u_x)$
22 $u_t = [f(x, u)]_x + g(u)$
23 $u_t = [f(x, u)]_x + g(u_x)$
24 $u_{tt} = [f(u)u_x]_x + g(u)u_x$
25 $u_{tt} = [f(u)u_x]_x + aux$
26 $u_{tt} = [f(u)u_x]_x + xg(u_x)$
27 $u_{tt} = [f(u)u_x]_x + g(u, u_x)$
28 $u_{tt} = [f(u, u_x)]_x + g(u, u_x)$
29 $u_{xt} = [f(uu_x)]_x + g(uu_x)$
30 $iu_t = au_{xx} + f(u)u_x$
)doc";

// Identical captions around two different images. Caption prose matches in
// full; the digests differ, so the figure channel must stay unmatched and
// keep the combined index under 100%.
constexpr std::string_view kFigureCat = R"doc(![fig:pet digest=3fa9c2d41b7e area=0.5]

На рисунке изображено домашнее животное, которое имеет четыре лапы, два глаза, два уха, нос, рот, хвост, покрыто шерстью и ест мясо. Напишите в домашней тетради название этого животного.
)doc";

constexpr std::string_view kFigureDog = R"doc(![fig:pet digest=8d04e7b91c2a area=0.5]

На рисунке изображено домашнее животное, которое имеет четыре лапы, два глаза, два уха, нос, рот, хвост, покрыто шерстью и ест мясо. Напишите в домашней тетради название этого животного.
)doc";

// Shared front/back matter (affiliations, acknowledgments) around disjoint
// bodies. The shared blocks are long enough to match as runs, so only zone
// exclusion keeps the pair at zero.
constexpr std::string_view kMetaA = R"doc(# Affiliations

Institute of Applied Dynamics, Riverside State University, 14 Embankment Lane, Rivertown, and the Center for Computational Wave Studies.

# Overview

We construct travelling wave profiles for a dispersive shallow water model and estimate their decay rates numerically.

# Acknowledgments

The authors are grateful to the participants of the city seminar on mathematical physics for valuable remarks and suggestions.
)doc";

constexpr std::string_view kMetaB = R"doc(# Affiliations

Institute of Applied Dynamics, Riverside State University, 14 Embankment Lane, Rivertown, and the Center for Computational Wave Studies.

# Overview

A boundary layer expansion is derived near the leading edge of a heated plate and matched against the outer inviscid flow.

# Acknowledgments

The authors are grateful to the participants of the city seminar on mathematical physics for valuable remarks and suggestions.
)doc";

// A reference list under a «Литература» heading: every entry sits in an
// exclusion zone and contributes nothing to any index.
constexpr std::string_view kReferenceList =
    R"doc(This survey collects the exact solutions published for logarithmic diffusion equations over the last decade.

# Литература

1. Arbenin D. K. Logarithmic diffusion profiles on bounded domains. Transactions on Model Analysis, 2014, vol. 8, pp. 11–29.
2. Veldt H. Separable solutions of damped wave systems. Journal of Structured Equations, 2009, no. 4, pp. 77–90.
3. Oreshkin L. M., Panova R. S. Delay effects in reaction models. Applied Dynamics Letters, 2017, vol. 3, pp. 501–512.
4. Quarry T. Matching statistics over compressed token streams. Proceedings of the Text Algorithms Workshop, 2015, pp. 44–52.
5. Brennan C., Almeida F. Suffix structures for near-duplicate screening. Computing Surveys in Retrieval, 2012, vol. 19, pp. 201–230.
6. Ilyin G. V. On canonical renaming of bound identifiers. Notes on Formal Systems, 2006, no. 2, pp. 12–19.
7. Sandoval M. Weighted blends of heterogeneous similarity channels. Information Processing Review, 2018, vol. 54, pp. 330–344.
8. Krutov B. A. Exact solutions with proportional argument scaling. Functional Equations Quarterly, 2020, vol. 11, pp. 88–104.
9. Haldane W. Digest functions for figure deduplication. Imaging and Archives, 2013, vol. 7, pp. 150–166.
10. Petrova Y. N. Stop lists for terminological noise. Language Resources Bulletin, 2011, no. 5, pp. 23–31.
11. Marchetti S. Rounding conventions in composite indices. Metrics and Measurement, 2008, vol. 2, pp. 61–70.
12. Ober F. Threshold gating in editorial screening pipelines. Journal of Publication Workflows, 2019, vol. 6, pp. 9–18.
13. Tsvetkov A. A. Run-length filters for token matching. Pattern Notes, 2010, no. 8, pp. 40–47.
14. Ryle P., Chen D. Normalization tables for operator notation. Symbolic Computation Digest, 2016, vol. 31, pp. 275–288.
15. Novrov K. Case folding across Cyrillic and Latin scripts. Text Encoding Reports, 2007, no. 1, pp. 5–14.
16. Ashwell R. Byte-offset spans for reproducible highlighting. Software Practice Notes, 2015, vol. 22, pp. 130–141.
17. Ganin E. L. Zone detection by heading taxonomy. Document Engineering Letters, 2014, vol. 9, pp. 99–110.
18. Field J., Morozova T. Benchmarks for equation-aware comparison. Evaluation Forum Notes, 2021, vol. 4, pp. 17–33.
19. Sorel V. Asymmetric indices for document pairs. Retrieval Theory Letters, 2018, no. 3, pp. 55–64.
)doc";

// ---------------------------------------------------------------------------
// Check plumbing
// ---------------------------------------------------------------------------

class Checker {
  public:
    void number(std::string label, double expected, double actual) {
        if (expected == actual) {
            results_.push_back({std::move(label), true, {}});
            return;
        }
        std::ostringstream os;
        os << "expected " << expected << ", got " << actual;
        results_.push_back({std::move(label), false, os.str()});
    }

    void truth(std::string label, bool ok, std::string detail_on_failure = {}) {
        results_.push_back({std::move(label), ok, ok ? std::string{} : std::move(detail_on_failure)});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

  private:
    std::vector<CheckResult> results_;
};

Document parse_fixture(std::string_view id, const EngineConfig& cfg) {
    const FixtureDoc& doc = document(id);
    return parse_document(doc.source, cfg, doc.id);
}

std::vector<const Segment*> retained_formulas(const Document& doc) {
    std::vector<const Segment*> out;
    for (const auto& seg : doc.segments)
        if (seg.kind == SegmentKind::Formula && !seg.excluded) out.push_back(&seg);
    return out;
}

bool has_flag(const SimilarityReport& r, std::string_view flag) {
    for (const auto& f : r.flags)
        if (f == flag) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Case runners
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_shared_prose() {
    Checker ck;
    EngineConfig cfg = EngineConfig::defaults();
    Document v1 = parse_fixture("tt1-v1", cfg);
    Document v2 = parse_fixture("tt1-v2", cfg);

    ck.number("draft 1: retained words", 58, static_cast<double>(v1.word_count()));
    ck.number("draft 1: formula leaves", 93, static_cast<double>(v1.formula_leaf_count()));
    ck.number("draft 1: formula count", 9, static_cast<double>(retained_formulas(v1).size()));
    ck.number("draft 2: retained words", 51, static_cast<double>(v2.word_count()));
    ck.number("draft 2: formula leaves", 64, static_cast<double>(v2.formula_leaf_count()));
    ck.number("draft 2: formula count", 5, static_cast<double>(retained_formulas(v2).size()));

    // Shared between the drafts: the separable-form equation and the two
    // one-letter function declarations, 17 leaves in all. Text runs of eight
    // or more shared words cover 30 tokens in each direction.
    SimilarityReport d21 = compute_index(v2, v1, 3, cfg);
    ck.number("blended, draft 2 against draft 1: index", 29.9, round1(d21.index));
    ck.number("blended, draft 2 against draft 1: text matched", 30, d21.text.matched);
    ck.number("blended, draft 2 against draft 1: text total", 51, d21.text.total);
    ck.number("blended, draft 2 against draft 1: formula matched weight", 7 * 17, d21.formula.matched);
    ck.number("blended, draft 2 against draft 1: formula total weight", 7 * 64, d21.formula.total);

    SimilarityReport d12 = compute_index(v1, v2, 3, cfg);
    ck.number("blended, draft 1 against draft 2: index", 21.0, round1(d12.index));
    ck.number("blended, draft 1 against draft 2: text matched", 30, d12.text.matched);
    ck.number("blended, draft 1 against draft 2: formula matched weight", 7 * 17, d12.formula.matched);
    ck.number("blended, draft 1 against draft 2: formula total weight", 7 * 93, d12.formula.total);

    // Fragment-based tools report most of each draft as matched on this pair;
    // whole-unit matching keeps both directions at or below half.
    ck.truth("both directions stay at or below 50%", d21.index <= 50.0 && d12.index <= 50.0);

    SimilarityReport f12 = compute_index(v1, v2, 1, cfg);
    SimilarityReport f21 = compute_index(v2, v1, 1, cfg);
    ck.number("formulas only, draft 1 against draft 2: index", 18.3, round1(f12.index));
    ck.number("formulas only, draft 1 against draft 2: matched leaves", 17, f12.formula.matched);
    ck.number("formulas only, draft 2 against draft 1: index", 26.6, round1(f21.index));
    ck.number("formulas only, draft 2 against draft 1: matched leaves", 17, f21.formula.matched);

    SimilarityReport b21 = compute_index(v2, v1, 2, cfg);
    SimilarityReport b12 = compute_index(v1, v2, 2, cfg);
    ck.number("word-level blend, draft 2 against draft 1: index", 33.9, round1(b21.index));
    ck.number("word-level blend, draft 1 against draft 2: index", 24.3, round1(b12.index));
    return ck.take();
}

std::vector<CheckResult> run_numbered_rows() {
    Checker ck;
    EngineConfig cfg = EngineConfig::defaults();
    Document left = parse_fixture("tt2-left", cfg);
    Document right = parse_fixture("tt2-right", cfg);

    auto lf = retained_formulas(left);
    auto rf = retained_formulas(right);
    ck.number("left column: formula count", 30, static_cast<double>(lf.size()));
    ck.number("right column: formula count", 30, static_cast<double>(rf.size()));

    bool parses = true;
    std::string bad;
    for (const auto* seg : lf)
        if (!seg->ast) { parses = false; bad = seg->formula_source; }
    for (const auto* seg : rf)
        if (!seg->ast) { parses = false; bad = seg->formula_source; }
    ck.truth("every row parses", parses, "failed on: " + bad);

    int strict_collisions = 0, alpha_collisions = 0;
    for (std::size_t i = 0; i < lf.size() && i < rf.size(); ++i) {
        if (!lf[i]->ast || !rf[i]->ast) continue;
        if (formulas_equal(*lf[i]->ast, *rf[i]->ast, MatchMode::Strict)) ++strict_collisions;
        if (formulas_equal(*lf[i]->ast, *rf[i]->ast, MatchMode::Alpha)) ++alpha_collisions;
    }
    ck.number("aligned rows judged equal (strict)", 0, strict_collisions);
    ck.number("aligned rows judged equal (letter-renaming)", 0, alpha_collisions);

    // Strictly, the formulas-only index is zero in both directions — no
    // formula of either column occurs anywhere in the other.
    SimilarityReport rl = compute_index(right, left, 1, cfg);
    SimilarityReport lr = compute_index(left, right, 1, cfg);
    ck.number("formulas only, right against left: index", 0.0, rl.index);
    ck.number("formulas only, left against right: index", 0.0, lr.index);
    ck.number("formulas only, right against left: matched weight", 0, rl.formula.matched);
    ck.number("formulas only, left against right: matched weight", 0, lr.formula.matched);

    // Letter renaming is looser on purpose: left row 16 is right row 14 with
    // one coefficient relettered (a <-> e), so alpha mode credits exactly
    // that 10-leaf pair and nothing else.
    EngineConfig alpha_cfg = cfg;
    alpha_cfg.mode = MatchMode::Alpha;
    Document left_a = parse_fixture("tt2-left", alpha_cfg);
    Document right_a = parse_fixture("tt2-right", alpha_cfg);
    SimilarityReport la = compute_index(left_a, right_a, 1, alpha_cfg);
    SimilarityReport ra = compute_index(right_a, left_a, 1, alpha_cfg);
    ck.number("letter renaming, left against right: only the relettered row",
              100.0 * 10.0 / 320.0, la.index);
    ck.number("letter renaming, right against left: only the relettered row",
              100.0 * 10.0 / 333.0, ra.index);
    ck.number("letter renaming, left against right: matched weight", 10, la.formula.matched);
    ck.number("letter renaming, right against left: matched weight", 10, ra.formula.matched);

    // Renaming a row's letters bijectively is invisible to alpha matching
    // but visible to strict matching.
    FormulaAst original = parse_formula("y = a + x(b + x)");
    FormulaAst renamed = parse_formula("y = b + x(a + x)");
    ck.truth("row 1 under a<->b swap: equal up to renaming",
             formulas_equal(original, renamed, MatchMode::Alpha));
    ck.truth("row 1 under a<->b swap: distinct strictly",
             !formulas_equal(original, renamed, MatchMode::Strict));
    return ck.take();
}

std::vector<CheckResult> run_structure_examples() {
    Checker ck;
    struct Pair {
        const char* label;
        const char* a;
        const char* b;
    };
    // Near-twins that differ only in bracket placement, script placement or
    // operator reading — exactly the differences fragment counting ignores.
    const Pair pairs[] = {
        {"bars vs bracketed root", "g = 1 + |z| + |f|^{1/2}", "g = (1 + |z| + |f|)^{1/2}"},
        {"exponent vs subtraction", "y = a + bx^{-1/2}", "y = a + bx - 1/2"},
        {"first vs second time derivative", "u_t = [f(u)u_x]_x + g(u)",
         "u_{tt} = [f(u)u_x]_x + g(u)"},
    };
    for (const auto& p : pairs) {
        FormulaAst a = parse_formula(p.a);
        FormulaAst b = parse_formula(p.b);
        ck.truth(std::string(p.label) + ": distinct strictly",
                 !formulas_equal(a, b, MatchMode::Strict));
        ck.truth(std::string(p.label) + ": distinct up to renaming",
                 !formulas_equal(a, b, MatchMode::Alpha));
    }

    FormulaAst self = parse_formula("u_t = [f(u)u_x]_x + g(u)");
    ck.truth("a formula equals itself strictly", formulas_equal(self, self, MatchMode::Strict));
    ck.truth("pure renamings are alpha-equal",
             formulas_equal(parse_formula("y = a + bx^{-1/2}"),
                            parse_formula("z = c + dy^{-1/2}"), MatchMode::Alpha));
    return ck.take();
}

// Case-sensitive letter multiset shared between two phrases, as a percentage
// of the first phrase's letters — an independent recount of what the legacy
// fragment metric does to running prose.
double letter_overlap_percent(std::string_view first, std::string_view second) {
    std::map<char32_t, long long> pool;
    std::size_t i = 0;
    while (i < second.size()) {
        auto [cp, width] = utf8::decode(second, i);
        i += width > 0 ? width : 1;
        if (utf8::is_letter(cp)) ++pool[cp];
    }
    long long shared = 0, total = 0;
    i = 0;
    while (i < first.size()) {
        auto [cp, width] = utf8::decode(first, i);
        i += width > 0 ? width : 1;
        if (!utf8::is_letter(cp)) continue;
        ++total;
        auto it = pool.find(cp);
        if (it != pool.end() && it->second > 0) {
            --it->second;
            ++shared;
        }
    }
    return total > 0 ? 100.0 * static_cast<double>(shared) / static_cast<double>(total) : 0.0;
}

std::vector<CheckResult> run_fragment_baseline() {
    Checker ck;
    // Wave equation against heat equation: one subscript letter apart. The
    // legacy fragment metric scores the student's answer at 87.5%; the
    // whole-unit matcher rejects it in both modes.
    FormulaAst heat = parse_formula("u_t = a u_{xx}");
    FormulaAst wave = parse_formula("u_tt = a u_{xx}");
    ck.number("heat vs wave equation, fragment metric", 87.5, baseline_fragment_index(heat, wave));
    ck.truth("heat vs wave equation: distinct strictly",
             !formulas_equal(heat, wave, MatchMode::Strict));
    ck.truth("heat vs wave equation: distinct up to renaming",
             !formulas_equal(heat, wave, MatchMode::Alpha));
    ck.number("identical formulas, fragment metric", 100.0, baseline_fragment_index(wave, wave));

    // The same metric applied to words: two unrelated phrases share most of
    // their letters, so letter-level counting calls them similar. The metric
    // denominates over its reference argument, the recount over its first
    // phrase, so phrase1 plays reference in both.
    const std::string_view phrase1 = "Современное движение за мир";
    const std::string_view phrase2 = "Военное положение закончилось";
    FormulaAst letters1 = parse_formula(phrase1);
    FormulaAst letters2 = parse_formula(phrase2);
    double engine = baseline_fragment_index(letters2, letters1);
    ck.number("unrelated phrases, fragment metric equals the letter recount",
              letter_overlap_percent(phrase1, phrase2), engine);
    ck.truth("unrelated phrases score above 50% by fragments", engine > 50.0);
    return ck.take();
}

std::vector<CheckResult> run_figure_digests() {
    Checker ck;
    EngineConfig cfg = EngineConfig::defaults();
    Document cat = parse_fixture("figure-cat", cfg);
    Document dog = parse_fixture("figure-dog", cfg);

    ck.number("caption words", 28, static_cast<double>(cat.word_count()));

    // 28 caption words match in full; the figure weighs round(0.5 x 28) = 14
    // and stays unmatched because the digests differ: 28 / (28 + 14).
    SimilarityReport cd = compute_index(cat, dog, 3, cfg);
    ck.number("different images: index", 66.7, round1(cd.index));
    ck.number("different images: figure matched weight", 0, cd.figure.matched);
    ck.number("different images: figure total weight", 14, cd.figure.total);
    ck.number("different images: text matched", 28, cd.text.matched);
    ck.truth("different images keep the pair under 100%", cd.index < 100.0);

    SimilarityReport dc = compute_index(dog, cat, 3, cfg);
    ck.number("other direction: index", 66.7, round1(dc.index));
    ck.number("other direction: figure matched weight", 0, dc.figure.matched);

    SimilarityReport self = compute_index(cat, cat, 3, cfg);
    ck.number("same image: index", 100.0, self.index);
    ck.number("same image: figure matched weight", 14, self.figure.matched);

    SimilarityReport formulas_only = compute_index(cat, dog, 1, cfg);
    ck.number("formulas-only index of a formula-free page", 0.0, formulas_only.index);
    ck.truth("formula-free page is flagged", has_flag(formulas_only, "no formulas"));
    return ck.take();
}

std::vector<CheckResult> run_metadata_zones() {
    Checker ck;
    EngineConfig cfg = EngineConfig::defaults();
    Document a = parse_fixture("meta-a", cfg);
    Document b = parse_fixture("meta-b", cfg);

    ck.number("body words retained, first note", 17, static_cast<double>(a.word_count()));
    ck.number("body words retained, second note", 21, static_cast<double>(b.word_count()));

    ck.number("shared front/back matter, zones on: index", 0.0, compute_index(a, b, 3, cfg).index);
    ck.number("other direction, zones on: index", 0.0, compute_index(b, a, 3, cfg).index);

    // Without the zone rules the shared affiliation and acknowledgment
    // blocks match wholesale — the exclusion is what keeps the pair apart.
    EngineConfig open = cfg;
    open.zone_patterns.clear();
    Document a_open = parse_document(document("meta-a").source, open, "meta-a");
    Document b_open = parse_document(document("meta-b").source, open, "meta-b");
    ck.truth("zones off: the shared blocks do match",
             compute_index(a_open, b_open, 3, open).index > 0.0);
    return ck.take();
}

std::vector<CheckResult> run_reference_zone() {
    Checker ck;
    EngineConfig cfg = EngineConfig::defaults();
    Document doc = parse_fixture("reference-list", cfg);

    // Every line that starts with an entry number must lie in the excluded
    // region; only the 15-word preamble stays.
    const std::string& src = document("reference-list").source;
    int entries = 0;
    for (std::size_t pos = 0; pos < src.size();) {
        std::size_t eol = src.find('\n', pos);
        if (eol == std::string::npos) eol = src.size();
        std::size_t digits = pos;
        while (digits < eol && src[digits] >= '0' && src[digits] <= '9') ++digits;
        if (digits > pos && digits < eol && src[digits] == '.') ++entries;
        pos = eol + 1;
    }
    ck.number("entry lines in the source", 19, entries);
    ck.number("retained words", 15, static_cast<double>(doc.word_count()));

    bool zone_started = false, all_excluded = true;
    for (const auto& seg : doc.segments) {
        if (seg.kind == SegmentKind::Heading) zone_started = true;
        if (zone_started && !seg.excluded) all_excluded = false;
    }
    ck.truth("everything from the heading on is excluded", zone_started && all_excluded);

    ck.number("self-comparison over the retained part", 100.0,
              compute_index(doc, doc, 3, cfg).index);
    return ck.take();
}

std::vector<CheckResult> run_notation_rewrite() {
    Checker ck;
    const auto& rules = default_rewrite_rules();
    auto normalized = [&rules](const char* src) {
        return apply_rewrite_rules(parse_formula(src), rules);
    };

    ck.truth("e^{...} folds onto the function form",
             strict_equal(normalized("a + e^{2t}"), normalized("a + \\exp{2t}")));
    ck.truth("bare exponent folds too", strict_equal(normalized("e^x"), normalized("\\exp x")));
    ck.truth("other bases stay put", strict_equal(normalized("x^e"), parse_formula("x^e")));
    ck.truth("plain e stays put", strict_equal(normalized("e + x"), parse_formula("e + x")));

    auto custom = parse_rewrite_rules("\\frac{\\1}{\\2} => (\\1)/(\\2)");
    ck.truth("a user rule rewrites fractions to slash form",
             strict_equal(apply_rewrite_rules(parse_formula("\\frac{a+b}{2}"), custom),
                          parse_formula("(a+b)/(2)")));
    return ck.take();
}

}  // namespace

const std::vector<FixtureCase>& corpus() {
    static const std::vector<FixtureCase> cases = [] {
        std::vector<FixtureCase> out;
        out.push_back({"tt1-shared-prose",
                       "near-identical wording around entirely different equations stays at or below 50%",
                       "hand-counted words and leaves, frozen against the acceptance oracles",
                       {{"tt1-v1", std::string(kTt1V1)}, {"tt1-v2", std::string(kTt1V2)}},
                       &run_shared_prose});
        out.push_back({"tt2-numbered-rows",
                       "thirty near-twin equation rows: strictly none equal, and letter renaming"
                       " credits only the one genuinely relettered pair",
                       "exhaustive pairwise comparison across the columns",
                       {{"tt2-left", std::string(kTt2Left)}, {"tt2-right", std::string(kTt2Right)}},
                       &run_numbered_rows});
        out.push_back({"formula-structure-examples",
                       "bracket, script and operator placement distinguish near-twin formulas",
                       "structural comparison on pinned expression pairs",
                       {},
                       &run_structure_examples});
        out.push_back({"fragment-baseline-contrast",
                       "the legacy fragment metric scores near-misses and unrelated prose absurdly high",
                       "leaf-multiset arithmetic recounted in the check",
                       {},
                       &run_fragment_baseline});
        out.push_back({"figure-digest-pets",
                       "identical captions around different images stay under 100%",
                       "hand-counted caption words; digest matching by definition",
                       {{"figure-cat", std::string(kFigureCat)}, {"figure-dog", std::string(kFigureDog)}},
                       &run_figure_digests});
        out.push_back({"metadata-zones",
                       "shared affiliations and acknowledgments are excluded, leaving disjoint bodies at 0%",
                       "hand-constructed heading zones",
                       {{"meta-a", std::string(kMetaA)}, {"meta-b", std::string(kMetaB)}},
                       &run_metadata_zones});
        out.push_back({"reference-list-zone",
                       "a reference list under a literature heading contributes nothing",
                       "entry lines counted in the fixture source",
                       {{"reference-list", std::string(kReferenceList)}},
                       &run_reference_zone});
        out.push_back({"operator-notation-rewrite",
                       "notation rewriting folds spelling variants before comparison",
                       "rewriting fixpoint on pinned expressions",
                       {},
                       &run_notation_rewrite});
        return out;
    }();
    return cases;
}

const FixtureDoc& document(std::string_view id) {
    for (const auto& fc : corpus())
        for (const auto& doc : fc.documents)
            if (doc.id == id) return doc;
    throw std::out_of_range("unknown fixture document: " + std::string(id));
}

}  // namespace simdex::fixtures
