#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "simdex/formula_match.hpp"
#include "simdex/normalize.hpp"
#include "simdex/text_match.hpp"

namespace simdex {

struct Weights {
    double text = 1.0;
    double formula = 7.0;
};

// Everything tunable in one place. The defaults are the engine's reference
// profile: strict matching, eight-word minimum runs, formulas weighted 7x.
struct EngineConfig {
    MatchMode mode = MatchMode::Strict;
    int min_run_length = 8;
    Weights weights;
    StopTermDictionary stop_terms;
    std::vector<std::string> zone_patterns;  // case-insensitive substrings of heading titles
    std::vector<RewriteRule> rules;

    static EngineConfig defaults();
};

// Shipped lists, also used when no config overrides them.
const StopTermDictionary& default_stop_terms();
const std::vector<std::string>& default_zone_patterns();

// One pattern per line, '#' comments, blank lines skipped.
std::vector<std::string> parse_zone_patterns(std::string_view text);

// Flat key=value file (the SIMDEX_CONFIG format). Recognized keys:
//   mode=strict|alpha   min-run=N   weight-ratio=R
//   stop-terms=FILE     exclude-zones=FILE     norm-rules=FILE
// File-valued keys are loaded relative to the process working directory.
// Throws ConfigError on unknown keys or bad values.
void apply_config_file(EngineConfig& cfg, const std::string& path);

std::string read_file_or_throw(const std::string& path);  // ConfigError if unreadable

}  // namespace simdex
