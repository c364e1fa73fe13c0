#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "simdex/config.hpp"
#include "simdex/document.hpp"
#include "simdex/errors.hpp"
#include "simdex/fixtures.hpp"
#include "simdex/render.hpp"
#include "simdex/similarity.hpp"

namespace {

using namespace simdex;

// Exit codes: 0 success, 1 fixture checks failed, 2 unusable input
// (unreadable files, malformed documents or configuration, bad flags),
// 3 index above the --threshold gate.
constexpr int kExitOk = 0;
constexpr int kExitFixtureFailure = 1;
constexpr int kExitError = 2;
constexpr int kExitThreshold = 3;

struct CompareOptions {
    std::string path_a, path_b;
    int variant = 3;
    std::string mode;       // strict | alpha
    int min_run = 0;        // 0 = keep config value
    double weight_ratio = 0;
    std::string stop_terms_path, zones_path, rules_path;
    std::string format = "ansi";
    bool json_shortcut = false;
    std::string direction = "both";
    double threshold = -1;  // < 0 = gating off
    std::string out_path;
};

RenderFormat parse_format(const std::string& name) {
    if (name == "json") return RenderFormat::Json;
    if (name == "html") return RenderFormat::Html;
    return RenderFormat::Ansi;
}

void apply_flags(EngineConfig& cfg, const CompareOptions& opt) {
    if (opt.mode == "strict") cfg.mode = MatchMode::Strict;
    if (opt.mode == "alpha") cfg.mode = MatchMode::Alpha;
    if (opt.min_run > 0) cfg.min_run_length = opt.min_run;
    if (opt.weight_ratio > 0) {
        if (opt.weight_ratio < 5.0 || opt.weight_ratio > 10.0)
            std::cerr << "simdex: note: weight ratio " << opt.weight_ratio
                      << " lies outside the recommended band [5, 10]\n";
        cfg.weights = Weights{1.0, opt.weight_ratio};
    }
    if (!opt.stop_terms_path.empty())
        cfg.stop_terms = StopTermDictionary::from_text(read_file_or_throw(opt.stop_terms_path));
    if (!opt.zones_path.empty())
        cfg.zone_patterns = parse_zone_patterns(read_file_or_throw(opt.zones_path));
    if (!opt.rules_path.empty())
        cfg.rules = parse_rewrite_rules(read_file_or_throw(opt.rules_path));
}

int run_compare(const CompareOptions& opt) {
    EngineConfig cfg = EngineConfig::defaults();
    if (const char* env = std::getenv("SIMDEX_CONFIG"); env && *env) apply_config_file(cfg, env);
    apply_flags(cfg, opt);

    const std::string source_a = read_file_or_throw(opt.path_a);
    const std::string source_b = read_file_or_throw(opt.path_b);
    const Document a = parse_document(source_a, cfg, opt.path_a);
    const Document b = parse_document(source_b, cfg, opt.path_b);

    // The two directions are independent computations; run them in parallel.
    std::vector<SimilarityReport> reports;
    if (opt.direction == "both") {
        auto forward = std::async(std::launch::async,
                                  [&] { return compute_index(a, b, opt.variant, cfg); });
        SimilarityReport backward = compute_index(b, a, opt.variant, cfg);
        reports.push_back(forward.get());
        reports.push_back(std::move(backward));
    } else if (opt.direction == "b-a") {
        reports.push_back(compute_index(b, a, opt.variant, cfg));
    } else {
        reports.push_back(compute_index(a, b, opt.variant, cfg));
    }

    RenderFormat format = opt.json_shortcut ? RenderFormat::Json : parse_format(opt.format);
    std::string rendered = render_reports(reports, format);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path, std::ios::binary);
        if (!out) throw ConfigError("cannot write output file: " + opt.out_path);
        out << rendered;
    } else {
        std::cout << rendered;
    }

    if (opt.threshold >= 0) {
        for (const auto& r : reports)
            if (r.index > opt.threshold) {
                std::cerr << "simdex: index " << round1(r.index) << " (" << r.a_id << " against "
                          << r.b_id << ") exceeds threshold " << opt.threshold << "\n";
                return kExitThreshold;
            }
    }
    return kExitOk;
}

int run_fixtures(const std::string& filter, const std::string& dump_dir) {
    const auto& corpus = fixtures::corpus();
    int cases_run = 0;
    long long checks = 0, failures = 0;

    if (!dump_dir.empty()) std::filesystem::create_directories(dump_dir);

    for (const auto& fc : corpus) {
        if (!filter.empty() && fc.id.find(filter) == std::string::npos) continue;
        ++cases_run;

        if (!dump_dir.empty()) {
            for (const auto& doc : fc.documents) {
                std::filesystem::path path = std::filesystem::path(dump_dir) / (doc.id + ".md");
                std::ofstream out(path, std::ios::binary);
                if (!out) throw ConfigError("cannot write " + path.string());
                out << doc.source;
            }
        }

        auto results = fc.run();
        long long case_failures = 0;
        for (const auto& cr : results) case_failures += cr.passed ? 0 : 1;
        checks += static_cast<long long>(results.size());
        failures += case_failures;

        std::cout << (case_failures == 0 ? "PASS" : "FAIL") << "  " << fc.id << " — " << fc.summary
                  << "\n";
        for (const auto& cr : results)
            if (!cr.passed) std::cout << "      failed: " << cr.label << " (" << cr.detail << ")\n";
    }

    if (cases_run == 0) {
        std::cout << "no cases matched\n";
        return kExitOk;
    }
    std::cout << cases_run << " case(s), " << checks << " checks, " << failures << " failure(s)\n";
    return failures == 0 ? kExitOk : kExitFixtureFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"similarity index for scientific documents with formulas"};
    app.require_subcommand(1);

    CompareOptions opt;
    CLI::App* compare = app.add_subcommand("compare", "compare two documents");
    compare->add_option("A", opt.path_a, "first document")->required();
    compare->add_option("B", opt.path_b, "second document")->required();
    compare->add_option("--variant", opt.variant, "1 formulas only, 2 word blend, 3 full exclusions")
        ->check(CLI::Range(1, 3));
    compare->add_option("--mode", opt.mode, "formula equality: strict or alpha (letter renaming)")
        ->check(CLI::IsMember({"strict", "alpha"}));
    compare->add_option("--min-run", opt.min_run, "minimum matched word run (variant 3)")
        ->check(CLI::PositiveNumber);
    compare->add_option("--weight-ratio", opt.weight_ratio, "formula-to-word weight ratio")
        ->check(CLI::PositiveNumber);
    compare->add_option("--stop-terms", opt.stop_terms_path, "stop-term dictionary file");
    compare->add_option("--exclude-zones", opt.zones_path, "heading patterns file");
    compare->add_option("--norm-rules", opt.rules_path, "formula rewrite rules file");
    compare->add_option("--format", opt.format, "json, html or ansi")
        ->check(CLI::IsMember({"json", "html", "ansi"}));
    compare->add_flag("--json", opt.json_shortcut, "shorthand for --format json");
    compare->add_option("--direction", opt.direction, "a-b, b-a or both")
        ->check(CLI::IsMember({"a-b", "b-a", "both"}));
    compare->add_option("--threshold", opt.threshold, "exit 3 when an index exceeds this")
        ->check(CLI::Range(0.0, 100.0));
    compare->add_option("--out", opt.out_path, "write the report here instead of stdout");

    std::string filter, dump_dir;
    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "run the built-in corpus");
    fixtures_cmd->add_option("--filter", filter, "only cases whose id contains this");
    fixtures_cmd->add_option("--dump", dump_dir, "also write the embedded documents here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (compare->parsed()) return run_compare(opt);
        return run_fixtures(filter, dump_dir);
    } catch (const ParseError& e) {
        std::cerr << "simdex: " << e.what() << " (byte " << e.offset() << ")\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "simdex: " << e.what() << "\n";
        return kExitError;
    }
}
