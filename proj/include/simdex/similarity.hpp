#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "simdex/document.hpp"

namespace simdex {

enum class SpanKind { Text, Formula, Figure };

// A region of document A with its match verdict. Formula and figure spans
// are emitted for every retained unit, matched or not — a formula matches
// whole or not at all. Text spans are emitted per maximal matched run and
// may overlap. b_* locates one counterpart occurrence in document B.
struct MatchSpan {
    SpanKind kind = SpanKind::Text;
    std::size_t a_begin = 0, a_end = 0;  // byte range in A
    bool matched = false;
    bool has_b = false;
    std::size_t b_begin = 0, b_end = 0;  // byte range in B when has_b
};

struct ChannelTally {
    double matched = 0;
    double total = 0;
};

// One direction of one comparison; index(A,B) and index(B,A) are independent
// computations and the engine never averages them. Channel tallies carry the
// weighted counts that actually enter the index. The report is a plain value,
// safe to move across threads; a_source/a_excluded feed the renderers.
struct SimilarityReport {
    std::string a_id, b_id;
    int variant = 3;
    MatchMode mode = MatchMode::Strict;
    double index = 0;  // percentage in [0,100], unrounded; render with round1
    ChannelTally text, formula, figure;
    std::vector<MatchSpan> spans;
    int min_run_length = 8;
    double w_text = 1.0, w_formula = 7.0;
    std::vector<std::string> flags;
    std::string a_source;
    std::vector<std::pair<std::size_t, std::size_t>> a_excluded;  // byte ranges
};

// Formulas only: drop all prose, compare the remaining formulas as whole
// units; the index denominates over A's formula leaf weight.
SimilarityReport variant1_index(const Document& a, const Document& b, MatchMode mode);

// Weighted blend of word, formula-leaf and figure weights. Exclusion zones
// apply (they are part of the documents); no stop-term masking, no minimum
// run length — a word matches wherever it occurs in B.
SimilarityReport variant2_index(const Document& a, const Document& b, MatchMode mode,
                                const Weights& weights);

// The blend with all exclusions active: stop-term masking and the minimum
// run length on top of zone exclusion.
SimilarityReport variant3_index(const Document& a, const Document& b, MatchMode mode,
                                const Weights& weights, const StopTermDictionary& stop_terms,
                                int min_run_length);

// Dispatch on variant using the config's parameters.
SimilarityReport compute_index(const Document& a, const Document& b, int variant,
                               const EngineConfig& config);

// Each retained A figure weighs round-half-up(area_fraction x a_word_count)
// and matches iff some retained B figure carries an equal digest. Returns
// (matched weight, total weight), unscaled.
std::pair<long long, long long> figure_contribution(const std::vector<FigureDecl>& a_figures,
                                                    const std::vector<FigureDecl>& b_figures,
                                                    long long a_word_count);

// Presentation rounding to one decimal place, half away from zero.
double round1(double value);

}  // namespace simdex
