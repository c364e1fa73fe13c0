#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "simdex/config.hpp"
#include "simdex/math_ast.hpp"

namespace simdex {

enum class SegmentKind { Text, Formula, Figure, Heading };

struct WordToken {
    std::string text;        // folded to lowercase
    std::size_t begin = 0;   // byte range in the source
    std::size_t end = 0;
};

struct FigureDecl {
    std::string id;
    std::string digest;       // lowercase hex, author-supplied content hash
    double area_fraction = 0;  // of the document's area, in [0,1]
};

struct Segment {
    SegmentKind kind = SegmentKind::Text;
    std::size_t begin = 0, end = 0;  // half-open byte range, trimmed to content
    bool excluded = false;

    std::vector<WordToken> words;  // Text

    std::string formula_source;     // Formula: payload between the delimiters
    std::optional<FormulaAst> ast;  // parsed + normalized; empty iff parse failed
    std::string parse_error;        // the failure, when ast is empty

    FigureDecl figure;  // Figure

    int heading_level = 0;      // Heading
    std::string heading_title;  // trimmed title text (not part of the word stream)
};

struct Document {
    std::string id;      // file name / fixture id, echoed into reports
    std::string source;  // full original text, kept for rendering
    std::vector<Segment> segments;
    std::size_t source_len = 0;

    long long word_count() const;          // words in retained text runs
    long long formula_leaf_count() const;  // leaves over retained formulas
};

// A formula that failed to parse still matches byte-identical formulas: it
// acts as a single opaque leaf carrying its raw source.
FormulaAst effective_ast(const Segment& formula_segment);

// Letter/digit runs, lowercased, with byte offsets into `source`; `base` is
// added to every offset. Styling commands (\mathbf etc.) vanish; all other
// punctuation separates words.
std::vector<WordToken> tokenize_text(std::string_view source, std::size_t base = 0);

// Splits the source into text runs, $...$/$$...$$ formulas, #-headings and
// ![fig:...] directives; formulas are parsed and normalized with the
// config's rewrite table; exclusion zones are classified per the config's
// heading patterns. Throws ParseError on unterminated math or a malformed
// figure directive. Formula syntax errors are recorded, not thrown.
Document parse_document(std::string_view source, const EngineConfig& config,
                        std::string id = {});

// Marks every segment lying under a heading whose title contains one of the
// patterns (case-insensitive); the zone runs until the next heading of the
// same or a higher level.
void classify_zones(Document& doc, const std::vector<std::string>& patterns);

}  // namespace simdex
