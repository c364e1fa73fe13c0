#pragma once

#include <string>
#include <vector>

#include "simdex/similarity.hpp"

namespace simdex {

enum class RenderFormat { Json, Html, Ansi };

// json: stable key order, one object per report (an array when several
// reports are rendered together) — byte-stable across runs for diffing.
// html: one self-contained page, matched spans wrapped in <mark>, excluded
// zones dimmed; formulas and figures highlight whole or not at all.
// ansi: the same span semantics with terminal colors.
std::string render_report(const SimilarityReport& report, RenderFormat format);
std::string render_reports(const std::vector<SimilarityReport>& reports, RenderFormat format);

}  // namespace simdex
