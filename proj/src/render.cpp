#include "simdex/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include <nlohmann/json.hpp>

namespace simdex {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* mode_name(MatchMode m) { return m == MatchMode::Strict ? "strict" : "alpha"; }

const char* kind_name(SpanKind k) {
    switch (k) {
        case SpanKind::Text: return "text";
        case SpanKind::Formula: return "formula";
        default: return "figure";
    }
}

// Weighted tallies are integer-valued at default weights; emit them as JSON
// integers then, so reports stay clean and diffable.
ordered_json number(double v) {
    if (v == std::floor(v) && std::abs(v) < 9.0e15) return static_cast<long long>(v);
    return v;
}

ordered_json report_to_json(const SimilarityReport& r) {
    ordered_json j;
    j["direction"] = {{"a", r.a_id}, {"b", r.b_id}};
    j["variant"] = r.variant;
    j["mode"] = mode_name(r.mode);
    j["index"] = number(round1(r.index));
    ordered_json channels;
    for (const auto& [name, tally] :
         {std::pair<const char*, const ChannelTally*>{"text", &r.text},
          {"formula", &r.formula},
          {"figure", &r.figure}}) {
        channels[name] = {{"matched", number(tally->matched)}, {"total", number(tally->total)}};
    }
    j["channels"] = std::move(channels);
    ordered_json spans = ordered_json::array();
    for (const auto& s : r.spans) {
        ordered_json span;
        span["kind"] = kind_name(s.kind);
        span["a_range"] = {s.a_begin, s.a_end};
        if (s.has_b) span["b_range"] = {s.b_begin, s.b_end};
        span["matched"] = s.matched;
        spans.push_back(std::move(span));
    }
    j["spans"] = std::move(spans);
    j["params"] = {{"min_run_length", r.min_run_length},
                   {"w_text", number(r.w_text)},
                   {"w_formula", number(r.w_formula)}};
    j["flags"] = r.flags;
    return j;
}

// --- interval painting (shared by html and ansi) ----------------------------

enum class Paint { Matched, Excluded };

struct Interval {
    std::size_t begin = 0, end = 0;
    Paint paint = Paint::Matched;
    SpanKind kind = SpanKind::Text;
};

std::vector<std::pair<std::size_t, std::size_t>> merge_ranges(
    std::vector<std::pair<std::size_t, std::size_t>> ranges) {
    std::sort(ranges.begin(), ranges.end());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [b, e] : ranges) {
        if (b >= e) continue;
        if (!out.empty() && b <= out.back().second) {
            out.back().second = std::max(out.back().second, e);
        } else {
            out.emplace_back(b, e);
        }
    }
    return out;
}

// Matched spans of one kind never overlap spans of another (they live in
// different segments), and nothing matched lies inside an excluded zone, so
// after per-kind merging the paint list is disjoint.
std::vector<Interval> paint_intervals(const SimilarityReport& r) {
    std::vector<Interval> out;
    for (SpanKind kind : {SpanKind::Text, SpanKind::Formula, SpanKind::Figure}) {
        std::vector<std::pair<std::size_t, std::size_t>> ranges;
        for (const auto& s : r.spans)
            if (s.kind == kind && s.matched) ranges.emplace_back(s.a_begin, s.a_end);
        for (const auto& [b, e] : merge_ranges(std::move(ranges)))
            out.push_back({b, e, Paint::Matched, kind});
    }
    for (const auto& [b, e] : merge_ranges(r.a_excluded))
        out.push_back({b, e, Paint::Excluded, SpanKind::Text});
    std::sort(out.begin(), out.end(),
              [](const Interval& x, const Interval& y) { return x.begin < y.begin; });
    return out;
}

std::string html_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_pct(double index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", round1(index));
    return buf;
}

std::string format_tally(const ChannelTally& t) {
    auto one = [](double v) {
        char buf[32];
        if (v == std::floor(v) && std::abs(v) < 9.0e15)
            std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        else
            std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    return one(t.matched) + " / " + one(t.total);
}

void render_html_section(std::string& out, const SimilarityReport& r) {
    out += "<section>\n<h2>" + html_escape(r.a_id) + " &rarr; " + html_escape(r.b_id) +
           "</h2>\n";
    out += "<p class=\"meta\">variant " + std::to_string(r.variant) + " &middot; " +
           mode_name(r.mode) + " &middot; index <strong>" + format_pct(r.index) +
           "%</strong></p>\n";
    out += "<table><tr><th></th><th>matched</th><th>total</th></tr>";
    for (const auto& [name, tally] :
         {std::pair<const char*, const ChannelTally*>{"text", &r.text},
          {"formula", &r.formula},
          {"figure", &r.figure}}) {
        out += "<tr><td>" + std::string(name) + "</td><td>";
        std::string both = format_tally(*tally);
        std::size_t slash = both.find(" / ");
        out += both.substr(0, slash) + "</td><td>" + both.substr(slash + 3) + "</td></tr>";
    }
    out += "</table>\n";
    if (!r.flags.empty()) {
        out += "<p class=\"flags\">";
        for (std::size_t i = 0; i < r.flags.size(); ++i)
            out += (i ? ", " : "") + html_escape(r.flags[i]);
        out += "</p>\n";
    }
    out += "<pre class=\"doc\">";
    const auto intervals = paint_intervals(r);
    std::size_t pos = 0;
    const std::string& src = r.a_source;
    for (const auto& iv : intervals) {
        out += html_escape(std::string_view(src).substr(pos, iv.begin - pos));
        if (iv.paint == Paint::Excluded) {
            out += "<span class=\"excluded\">";
            out += html_escape(std::string_view(src).substr(iv.begin, iv.end - iv.begin));
            out += "</span>";
        } else {
            out += "<mark class=\"";
            out += kind_name(iv.kind);
            out += "\">";
            out += html_escape(std::string_view(src).substr(iv.begin, iv.end - iv.begin));
            out += "</mark>";
        }
        pos = iv.end;
    }
    out += html_escape(std::string_view(src).substr(pos));
    out += "</pre>\n</section>\n";
}

std::string render_html(const std::vector<SimilarityReport>& reports) {
    std::string out =
        "<!doctype html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
        "<title>similarity report</title>\n<style>\n"
        "body{font-family:sans-serif;margin:2rem auto;max-width:52rem;line-height:1.45}\n"
        "table{border-collapse:collapse;margin:0.5rem 0}\n"
        "td,th{border:1px solid #bbb;padding:0.15rem 0.6rem;text-align:right}\n"
        "td:first-child,th:first-child{text-align:left}\n"
        "pre.doc{white-space:pre-wrap;background:#f7f7f7;padding:1rem;border-radius:4px}\n"
        "mark.text{background:#ffb3b3}\n"
        "mark.formula{background:#ff8a8a}\n"
        "mark.figure{background:#ffd0a0}\n"
        "span.excluded{color:#999;text-decoration:line-through}\n"
        ".meta{color:#444}\n.flags{color:#a40}\n"
        "</style>\n</head>\n<body>\n";
    for (const auto& r : reports) render_html_section(out, r);
    out += "</body>\n</html>\n";
    return out;
}

void render_ansi_block(std::string& out, const SimilarityReport& r) {
    out += r.a_id + " -> " + r.b_id + "   variant " + std::to_string(r.variant) + "   " +
           mode_name(r.mode) + "   index " + format_pct(r.index) + "%\n";
    out += "  text    " + format_tally(r.text) + "\n";
    out += "  formula " + format_tally(r.formula) + "\n";
    out += "  figure  " + format_tally(r.figure) + "\n";
    if (!r.flags.empty()) {
        out += "  flags:";
        for (const auto& f : r.flags) out += " " + f;
        out += "\n";
    }
    out += "\n";
    const auto intervals = paint_intervals(r);
    std::size_t pos = 0;
    const std::string& src = r.a_source;
    for (const auto& iv : intervals) {
        out.append(src, pos, iv.begin - pos);
        out += iv.paint == Paint::Excluded ? "\x1b[2m" : "\x1b[31m";
        out.append(src, iv.begin, iv.end - iv.begin);
        out += "\x1b[0m";
        pos = iv.end;
    }
    out.append(src, pos, std::string::npos);
    if (out.empty() || out.back() != '\n') out += '\n';
}

}  // namespace

std::string render_reports(const std::vector<SimilarityReport>& reports, RenderFormat format) {
    switch (format) {
        case RenderFormat::Json: {
            if (reports.size() == 1) return report_to_json(reports.front()).dump(2) + "\n";
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            return arr.dump(2) + "\n";
        }
        case RenderFormat::Html:
            return render_html(reports);
        default: {
            std::string out;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                if (i) out += "\n" + std::string(72, '-') + "\n\n";
                render_ansi_block(out, reports[i]);
            }
            return out;
        }
    }
}

std::string render_report(const SimilarityReport& report, RenderFormat format) {
    return render_reports({report}, format);
}

}  // namespace simdex
