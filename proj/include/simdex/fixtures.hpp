#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace simdex::fixtures {

// An embedded document in the engine's input format.
struct FixtureDoc {
    std::string id;      // unique across the corpus; doubles as the report id
    std::string source;  // full document text
};

struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail;  // expected-vs-actual note, empty when passed
};

// A self-verifying demonstration: documents with known similarity outcomes.
// The `fixtures` CLI command runs every case; the expected values are frozen
// constants whose origin is named in `basis`.
struct FixtureCase {
    std::string id;       // stable, filterable (substring match)
    std::string summary;  // what the case demonstrates
    std::string basis;    // where the expected values come from
    std::vector<FixtureDoc> documents;
    std::vector<CheckResult> (*run)();
};

const std::vector<FixtureCase>& corpus();

// Looks a document up across all cases; throws std::out_of_range on an
// unknown id.
const FixtureDoc& document(std::string_view id);

}  // namespace simdex::fixtures
