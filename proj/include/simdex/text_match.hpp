#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace simdex {

// Fixed scientific phrases to exclude from matching: lowercase word
// sequences of one to eight words, applied longest-match-first.
struct StopTermDictionary {
    std::vector<std::vector<std::string>> entries;  // sorted longest first

    // One term per line, '#' comments. Throws ConfigError on an empty or
    // over-long (> 8 words) entry.
    static StopTermDictionary from_text(std::string_view text);

    bool empty() const { return entries.empty(); }
    void add(std::string_view term);  // tokenizes, lowercases, dedupes
};

// Marks every occurrence of any dictionary entry, scanning left to right and
// preferring the longest entry at each position; occurrences never overlap.
// Returns one flag per token, true = masked.
std::vector<bool> apply_stop_terms(const std::vector<std::string>& words,
                                   const StopTermDictionary& dict);

// A maximal matched run: tokens [a_begin, a_end) of A chunk a_chunk occur
// contiguously in B chunk b_chunk starting at b_begin. Chunks are the unit
// of contiguity — a run never crosses a chunk boundary on either side.
struct TokenRun {
    std::size_t a_chunk = 0, a_begin = 0, a_end = 0;
    std::size_t b_chunk = 0, b_begin = 0;
};

// All maximal runs of at least min_run_length consecutive A tokens that
// occur contiguously anywhere in B. Maximal runs may overlap each other.
// Near-linear: one suffix automaton over B, one matching-statistics sweep
// over A.
std::vector<TokenRun> find_matched_runs(const std::vector<std::vector<std::string>>& a_chunks,
                                        const std::vector<std::vector<std::string>>& b_chunks,
                                        int min_run_length);

// Number of distinct A token positions covered by at least one run.
long long matched_token_count(const std::vector<TokenRun>& runs);

}  // namespace simdex
