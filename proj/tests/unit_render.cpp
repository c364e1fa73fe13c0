#include "doctest.h"

#include <regex>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "simdex/config.hpp"
#include "simdex/document.hpp"
#include "simdex/fixtures.hpp"
#include "simdex/render.hpp"
#include "simdex/similarity.hpp"

using namespace simdex;

namespace {

std::string strip_ansi(const std::string& s) {
    static const std::regex esc("\x1b\\[[0-9;]*m");
    return std::regex_replace(s, esc, "");
}

struct Tt1Pair {
    Document v1, v2;
    Tt1Pair() {
        auto cfg = EngineConfig::defaults();
        v1 = parse_document(fixtures::document("tt1-v1").source, cfg, "tt1-v1");
        v2 = parse_document(fixtures::document("tt1-v2").source, cfg, "tt1-v2");
    }
};

}  // namespace

TEST_CASE("json reports carry the documented keys in a fixed order") {
    Tt1Pair tt;
    auto cfg = EngineConfig::defaults();
    auto r = compute_index(tt.v1, tt.v2, 3, cfg);
    const std::string out = render_report(r, RenderFormat::Json);

    // Stable order: direction, variant, mode, index, channels, spans, params, flags.
    std::size_t last = 0;
    for (const char* key : {"\"direction\"", "\"variant\"", "\"mode\"", "\"index\"",
                            "\"channels\"", "\"spans\"", "\"params\"", "\"flags\""}) {
        std::size_t at = out.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at > last);
        last = at;
    }

    auto j = nlohmann::json::parse(out);
    CHECK(j["direction"]["a"] == "tt1-v1");
    CHECK(j["direction"]["b"] == "tt1-v2");
    CHECK(j["variant"] == 3);
    CHECK(j["mode"] == "strict");
    CHECK(j["channels"]["text"]["total"] == 58);
    CHECK(j["channels"]["formula"]["matched"] == 119);
    CHECK(j["channels"]["formula"]["total"] == 651);
    CHECK(j["params"]["min_run_length"] == 8);
    CHECK(j["params"]["w_text"] == 1);
    CHECK(j["params"]["w_formula"] == 7);
    CHECK(j["flags"].is_array());

    for (const auto& span : j["spans"]) {
        CHECK(span["a_range"].size() == 2);
        CHECK(span["a_range"][0] < span["a_range"][1]);
        // b_range appears exactly for matched spans.
        CHECK(span.contains("b_range") == span["matched"].get<bool>());
    }
}

TEST_CASE("integral values render as json integers, fractional ones keep the decimal") {
    Tt1Pair tt;
    auto cfg = EngineConfig::defaults();
    // index(v1 over v2-as-A) = 100 x 149/499 = 29.86 -> "29.9"
    auto r21 = compute_index(tt.v2, tt.v1, 3, cfg);
    CHECK(render_report(r21, RenderFormat::Json).find("\"index\": 29.9") != std::string::npos);
    // index(v2 over v1-as-A) = 100 x 149/709 = 21.02 -> rounds to the integer 21
    auto r12 = compute_index(tt.v1, tt.v2, 3, cfg);
    const std::string out = render_report(r12, RenderFormat::Json);
    CHECK(out.find("\"index\": 21,") != std::string::npos);
    CHECK(out.find("21.0") == std::string::npos);
}

TEST_CASE("json output is byte-stable and wraps several reports in an array") {
    Tt1Pair tt;
    auto cfg = EngineConfig::defaults();
    auto r = compute_index(tt.v1, tt.v2, 3, cfg);
    auto again = compute_index(tt.v1, tt.v2, 3, cfg);
    CHECK(render_report(r, RenderFormat::Json) == render_report(again, RenderFormat::Json));

    CHECK(render_report(r, RenderFormat::Json).front() == '{');
    auto both = render_reports({r, compute_index(tt.v2, tt.v1, 3, cfg)}, RenderFormat::Json);
    CHECK(both.front() == '[');
    CHECK(nlohmann::json::parse(both).size() == 2);
}

TEST_CASE("html highlights whole units and escapes the source") {
    auto cfg = EngineConfig::defaults();
    const std::string src =
        "x <tag> & stuff y one two three four five six seven eight\n\n$a + b$\n";
    auto doc = parse_document(src, cfg, "self");
    auto r = compute_index(doc, doc, 3, cfg);
    const std::string html = render_report(r, RenderFormat::Html);

    CHECK(html.rfind("<!doctype html>", 0) == 0);
    // The formula is highlighted whole, never a fragment of it.
    CHECK(html.find("<mark class=\"formula\">$a + b$</mark>") != std::string::npos);
    CHECK(html.find("<mark class=\"text\">") != std::string::npos);
    // Raw source angle brackets are escaped away.
    CHECK(html.find("<tag>") == std::string::npos);
    CHECK(html.find("&lt;tag&gt;") != std::string::npos);
    CHECK(html.find("&amp; stuff") != std::string::npos);
    // Self-contained: no external resources.
    CHECK(html.find("http://") == std::string::npos);
    CHECK(html.find("https://") == std::string::npos);
}

TEST_CASE("html dims excluded zones and lists flags") {
    auto cfg = EngineConfig::defaults();
    auto doc = parse_document("body text\n\n# Литература\n\n1. Entry one.\n", cfg, "zones");
    auto r = compute_index(doc, doc, 3, cfg);
    const std::string html = render_report(r, RenderFormat::Html);
    CHECK(html.find("<span class=\"excluded\">") != std::string::npos);

    auto empty = parse_document("", cfg, "empty");
    auto re = compute_index(empty, empty, 3, cfg);
    CHECK(render_report(re, RenderFormat::Html).find("empty document") != std::string::npos);
}

TEST_CASE("ansi output colors matches and reproduces the source when stripped") {
    auto cfg = EngineConfig::defaults();
    const std::string src = "one two three four five six seven eight nine\n\n$k = m$\n";
    auto doc = parse_document(src, cfg, "self");
    auto r = compute_index(doc, doc, 3, cfg);
    const std::string out = render_report(r, RenderFormat::Ansi);

    CHECK(out.find("\x1b[31m") != std::string::npos);  // matched paint
    CHECK(out.find("\x1b[0m") != std::string::npos);   // reset
    CHECK(out.find("self -> self") != std::string::npos);
    CHECK(strip_ansi(out).find(src) != std::string::npos);

    auto zoned = parse_document("a\n\n# Литература\n\nb\n", cfg, "z");
    auto rz = compute_index(zoned, zoned, 3, cfg);
    CHECK(render_report(rz, RenderFormat::Ansi).find("\x1b[2m") != std::string::npos);
}

TEST_CASE("ansi tallies print as plain integers at default weights") {
    Tt1Pair tt;
    auto cfg = EngineConfig::defaults();
    auto r = compute_index(tt.v2, tt.v1, 3, cfg);
    const std::string out = render_report(r, RenderFormat::Ansi);
    CHECK(out.find("index 29.9%") != std::string::npos);
    CHECK(out.find("formula 119 / 448") != std::string::npos);
    CHECK(out.find("text    30 / 51") != std::string::npos);
}
