#include "simdex/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "simdex/errors.hpp"
#include "simdex/formula_match.hpp"
#include "simdex/text_match.hpp"

namespace simdex {

namespace {

// --- text channel ----------------------------------------------------------

struct ChunkMeta {
    std::size_t seg = 0;   // segment index in the document
    std::size_t base = 0;  // index of the chunk's first word within the segment
};

struct TextStream {
    std::vector<std::vector<std::string>> chunks;
    std::vector<ChunkMeta> meta;
    long long token_total = 0;
};

// Retained text as contiguity chunks: a chunk never crosses a segment
// boundary (formulas, headings and figures interrupt prose) and splits
// again at every masked stop-term token.
TextStream build_text_stream(const Document& d, const StopTermDictionary& stop) {
    TextStream s;
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
        const Segment& seg = d.segments[i];
        if (seg.kind != SegmentKind::Text || seg.excluded || seg.words.empty()) continue;
        std::vector<std::string> texts;
        texts.reserve(seg.words.size());
        for (const auto& w : seg.words) texts.push_back(w.text);
        const std::vector<bool> mask = stop.empty() ? std::vector<bool>(texts.size(), false)
                                                    : apply_stop_terms(texts, stop);
        std::size_t k = 0;
        while (k < texts.size()) {
            if (mask[k]) {
                ++k;
                continue;
            }
            std::size_t j = k;
            while (j < texts.size() && !mask[j]) ++j;
            s.chunks.emplace_back(texts.begin() + static_cast<std::ptrdiff_t>(k),
                                  texts.begin() + static_cast<std::ptrdiff_t>(j));
            s.meta.push_back({i, k});
            s.token_total += static_cast<long long>(j - k);
            k = j;
        }
    }
    return s;
}

struct TextChannel {
    long long matched = 0, total = 0;
    std::vector<MatchSpan> spans;
};

TextChannel text_channel(const Document& a, const Document& b, const StopTermDictionary& stop,
                         int min_run_length) {
    const TextStream sa = build_text_stream(a, stop);
    const TextStream sb = build_text_stream(b, stop);
    const auto runs = find_matched_runs(sa.chunks, sb.chunks, min_run_length);

    TextChannel ch;
    ch.total = sa.token_total;
    ch.matched = matched_token_count(runs);
    for (const auto& run : runs) {
        const ChunkMeta& am = sa.meta[run.a_chunk];
        const auto& aw = a.segments[am.seg].words;
        const ChunkMeta& bm = sb.meta[run.b_chunk];
        const auto& bw = b.segments[bm.seg].words;
        const std::size_t len = run.a_end - run.a_begin;

        MatchSpan span;
        span.kind = SpanKind::Text;
        span.matched = true;
        span.a_begin = aw[am.base + run.a_begin].begin;
        span.a_end = aw[am.base + run.a_end - 1].end;
        span.has_b = true;
        span.b_begin = bw[bm.base + run.b_begin].begin;
        span.b_end = bw[bm.base + run.b_begin + len - 1].end;
        ch.spans.push_back(span);
    }
    return ch;
}

// --- formula channel --------------------------------------------------------

struct FormulaRefs {
    std::vector<std::size_t> segs;
    std::vector<AstNode> asts;
};

FormulaRefs collect_formulas(const Document& d) {
    FormulaRefs f;
    for (std::size_t i = 0; i < d.segments.size(); ++i) {
        const Segment& seg = d.segments[i];
        if (seg.kind != SegmentKind::Formula || seg.excluded) continue;
        f.segs.push_back(i);
        f.asts.push_back(effective_ast(seg));
    }
    return f;
}

struct FormulaChannel {
    long long matched = 0, total = 0;
    std::vector<MatchSpan> spans;
};

FormulaChannel formula_channel(const Document& a, const Document& b, MatchMode mode) {
    const FormulaRefs fa = collect_formulas(a);
    const FormulaRefs fb = collect_formulas(b);
    const auto map = match_formulas(fa.asts, fb.asts, mode);

    FormulaChannel ch;
    for (std::size_t i = 0; i < fa.asts.size(); ++i) {
        const long long weight = leaf_count(fa.asts[i]);
        ch.total += weight;
        const Segment& seg = a.segments[fa.segs[i]];
        MatchSpan span;
        span.kind = SpanKind::Formula;
        span.a_begin = seg.begin;
        span.a_end = seg.end;
        if (map[i]) {
            ch.matched += weight;
            span.matched = true;
            span.has_b = true;
            const Segment& bs = b.segments[fb.segs[*map[i]]];
            span.b_begin = bs.begin;
            span.b_end = bs.end;
        }
        ch.spans.push_back(span);
    }
    return ch;
}

// --- figure channel ---------------------------------------------------------

long long figure_weight(double area_fraction, long long a_word_count) {
    return static_cast<long long>(
        std::floor(area_fraction * static_cast<double>(a_word_count) + 0.5));
}

struct FigureChannel {
    long long matched = 0, total = 0;
    std::vector<MatchSpan> spans;
};

FigureChannel figure_channel(const Document& a, const Document& b, long long a_word_count) {
    std::vector<std::size_t> b_figs;
    for (std::size_t j = 0; j < b.segments.size(); ++j)
        if (b.segments[j].kind == SegmentKind::Figure && !b.segments[j].excluded)
            b_figs.push_back(j);

    FigureChannel ch;
    for (std::size_t i = 0; i < a.segments.size(); ++i) {
        const Segment& seg = a.segments[i];
        if (seg.kind != SegmentKind::Figure || seg.excluded) continue;
        const long long weight = figure_weight(seg.figure.area_fraction, a_word_count);
        ch.total += weight;
        MatchSpan span;
        span.kind = SpanKind::Figure;
        span.a_begin = seg.begin;
        span.a_end = seg.end;
        for (std::size_t j : b_figs) {
            if (b.segments[j].figure.digest == seg.figure.digest) {
                ch.matched += weight;
                span.matched = true;
                span.has_b = true;
                span.b_begin = b.segments[j].begin;
                span.b_end = b.segments[j].end;
                break;
            }
        }
        ch.spans.push_back(span);
    }
    return ch;
}

// --- assembly ----------------------------------------------------------------

void fill_common(SimilarityReport& r, const Document& a, const Document& b) {
    r.a_id = a.id;
    r.b_id = b.id;
    r.a_source = a.source;
    for (const auto& seg : a.segments)
        if (seg.excluded) r.a_excluded.emplace_back(seg.begin, seg.end);
}

void sort_spans(std::vector<MatchSpan>& spans) {
    std::sort(spans.begin(), spans.end(), [](const MatchSpan& x, const MatchSpan& y) {
        if (x.a_begin != y.a_begin) return x.a_begin < y.a_begin;
        return x.a_end < y.a_end;
    });
}

SimilarityReport blended_index(const Document& a, const Document& b, int variant, MatchMode mode,
                               const Weights& w, const StopTermDictionary& stop,
                               int min_run_length) {
    SimilarityReport r;
    r.variant = variant;
    r.mode = mode;
    r.min_run_length = min_run_length;
    r.w_text = w.text;
    r.w_formula = w.formula;
    fill_common(r, a, b);

    const TextChannel tc = text_channel(a, b, stop, min_run_length);
    const FormulaChannel fc = formula_channel(a, b, mode);
    const FigureChannel gc = figure_channel(a, b, a.word_count());

    // Figure weights ride on w_text: they are denominated in words, so they
    // must scale with the word weight for the index to be invariant under a
    // common rescaling of (w_text, w_formula).
    r.text = {w.text * static_cast<double>(tc.matched), w.text * static_cast<double>(tc.total)};
    r.formula = {w.formula * static_cast<double>(fc.matched),
                 w.formula * static_cast<double>(fc.total)};
    r.figure = {w.text * static_cast<double>(gc.matched), w.text * static_cast<double>(gc.total)};

    const double matched = r.text.matched + r.formula.matched + r.figure.matched;
    const double total = r.text.total + r.formula.total + r.figure.total;
    if (total > 0) {
        r.index = 100.0 * matched / total;
    } else {
        r.index = 0.0;
        r.flags.push_back("empty document");
    }

    r.spans = tc.spans;
    r.spans.insert(r.spans.end(), fc.spans.begin(), fc.spans.end());
    r.spans.insert(r.spans.end(), gc.spans.begin(), gc.spans.end());
    sort_spans(r.spans);
    return r;
}

}  // namespace

SimilarityReport variant1_index(const Document& a, const Document& b, MatchMode mode) {
    SimilarityReport r;
    r.variant = 1;
    r.mode = mode;
    fill_common(r, a, b);

    const FormulaChannel fc = formula_channel(a, b, mode);
    r.formula = {static_cast<double>(fc.matched), static_cast<double>(fc.total)};
    if (fc.total > 0) {
        r.index = 100.0 * static_cast<double>(fc.matched) / static_cast<double>(fc.total);
    } else {
        r.index = 0.0;
        r.flags.push_back("no formulas");
    }
    r.spans = fc.spans;
    sort_spans(r.spans);
    return r;
}

SimilarityReport variant2_index(const Document& a, const Document& b, MatchMode mode,
                                const Weights& weights) {
    return blended_index(a, b, 2, mode, weights, StopTermDictionary{}, 1);
}

SimilarityReport variant3_index(const Document& a, const Document& b, MatchMode mode,
                                const Weights& weights, const StopTermDictionary& stop_terms,
                                int min_run_length) {
    return blended_index(a, b, 3, mode, weights, stop_terms, min_run_length);
}

SimilarityReport compute_index(const Document& a, const Document& b, int variant,
                               const EngineConfig& config) {
    switch (variant) {
        case 1: {
            SimilarityReport r = variant1_index(a, b, config.mode);
            r.min_run_length = config.min_run_length;  // echo only
            r.w_text = config.weights.text;
            r.w_formula = config.weights.formula;
            return r;
        }
        case 2:
            return variant2_index(a, b, config.mode, config.weights);
        case 3:
            return variant3_index(a, b, config.mode, config.weights, config.stop_terms,
                                  config.min_run_length);
        default:
            throw ConfigError("variant must be 1, 2 or 3");
    }
}

std::pair<long long, long long> figure_contribution(const std::vector<FigureDecl>& a_figures,
                                                    const std::vector<FigureDecl>& b_figures,
                                                    long long a_word_count) {
    long long matched = 0, total = 0;
    for (const auto& fig : a_figures) {
        const long long weight = figure_weight(fig.area_fraction, a_word_count);
        total += weight;
        for (const auto& other : b_figures) {
            if (other.digest == fig.digest) {
                matched += weight;
                break;
            }
        }
    }
    return {matched, total};
}

double round1(double value) { return std::round(value * 10.0) / 10.0; }

}  // namespace simdex
