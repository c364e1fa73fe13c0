#include "simdex/document.hpp"

#include <cctype>
#include <utility>

#include "simdex/errors.hpp"
#include "simdex/math_lexer.hpp"
#include "simdex/math_parser.hpp"
#include "simdex/utf8.hpp"

namespace simdex {

namespace {

bool ws_byte(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::pair<std::size_t, std::size_t> trim_range(std::string_view s, std::size_t b, std::size_t e) {
    while (b < e && ws_byte(s[b])) ++b;
    while (e > b && ws_byte(s[e - 1])) --e;
    return {b, e};
}

bool hex_lower(std::string_view s) {
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'f')))
            return false;
    return !s.empty();
}

FigureDecl parse_figure_directive(std::string_view body, std::string_view whole,
                                  std::size_t offset) {
    auto malformed = [&whole, offset](const char* why) -> ParseError {
        return ParseError("malformed figure directive '" + std::string(whole) + "': " + why,
                          offset);
    };
    FigureDecl fig;
    std::size_t p = 0;
    while (p < body.size() && body[p] != ' ') ++p;
    fig.id = std::string(body.substr(0, p));
    if (fig.id.empty()) throw malformed("missing id");
    while (p < body.size() && body[p] == ' ') ++p;
    if (body.compare(p, 7, "digest=") != 0) throw malformed("missing digest=");
    p += 7;
    std::size_t q = p;
    while (q < body.size() && body[q] != ' ') ++q;
    fig.digest = std::string(body.substr(p, q - p));
    if (!hex_lower(fig.digest)) throw malformed("digest must be lowercase hex");
    p = q;
    while (p < body.size() && body[p] == ' ') ++p;
    if (body.compare(p, 5, "area=") != 0) throw malformed("missing area=");
    p += 5;
    std::string num(body.substr(p));
    std::size_t used = 0;
    try {
        fig.area_fraction = std::stod(num, &used);
    } catch (...) {
        throw malformed("area is not a number");
    }
    if (used != num.size()) throw malformed("trailing junk after area");
    if (fig.area_fraction < 0.0 || fig.area_fraction > 1.0)
        throw malformed("area must lie in [0,1]");
    return fig;
}

}  // namespace

std::vector<WordToken> tokenize_text(std::string_view source, std::size_t base) {
    std::vector<WordToken> out;
    std::string cur;
    std::size_t cur_begin = 0;
    auto flush = [&out, &cur, &cur_begin, base](std::size_t end_pos) {
        if (cur.empty()) return;
        out.push_back({std::move(cur), base + cur_begin, base + end_pos});
        cur.clear();
    };
    std::size_t pos = 0;
    while (pos < source.size()) {
        if (source[pos] == '\\') {
            // A styling command disappears entirely; for anything else only
            // the backslash goes, so \alpha in prose still yields "alpha".
            std::size_t q = pos + 1;
            while (q < source.size() && std::isalpha(static_cast<unsigned char>(source[q]))) ++q;
            std::string name(source.substr(pos + 1, q - pos - 1));
            flush(pos);
            pos = is_styling_command(name) ? q : pos + 1;
            continue;
        }
        auto d = utf8::decode(source, pos);
        if (d.width == 0) {  // invalid byte: word separator
            flush(pos);
            pos += 1;
            continue;
        }
        if (utf8::is_word_char(d.cp)) {
            if (cur.empty()) cur_begin = pos;
            utf8::append(cur, utf8::fold(d.cp));
        } else {
            flush(pos);
        }
        pos += d.width;
    }
    flush(source.size());
    return out;
}

long long Document::word_count() const {
    long long n = 0;
    for (const auto& seg : segments)
        if (seg.kind == SegmentKind::Text && !seg.excluded)
            n += static_cast<long long>(seg.words.size());
    return n;
}

long long Document::formula_leaf_count() const {
    long long n = 0;
    for (const auto& seg : segments)
        if (seg.kind == SegmentKind::Formula && !seg.excluded) n += leaf_count(effective_ast(seg));
    return n;
}

FormulaAst effective_ast(const Segment& formula_segment) {
    if (formula_segment.ast) return *formula_segment.ast;
    return make_opaque(formula_segment.formula_source);
}

Document parse_document(std::string_view source, const EngineConfig& config, std::string id) {
    Document doc;
    doc.id = std::move(id);
    doc.source = std::string(source);
    doc.source_len = source.size();

    std::size_t pos = 0;
    std::size_t text_from = 0;
    bool at_line_start = true;

    auto flush_text = [&doc, &text_from, source](std::size_t upto) {
        auto [b, e] = trim_range(source, text_from, upto);
        if (b == e) return;
        Segment seg;
        seg.kind = SegmentKind::Text;
        seg.begin = b;
        seg.end = e;
        seg.words = tokenize_text(source.substr(b, e - b), b);
        doc.segments.push_back(std::move(seg));
    };

    while (pos < source.size()) {
        const char c = source[pos];

        if (at_line_start && c == '#') {
            std::size_t h = pos;
            int level = 0;
            while (h < source.size() && source[h] == '#') {
                ++level;
                ++h;
            }
            if (h < source.size() && source[h] == ' ') {
                flush_text(pos);
                std::size_t eol = source.find('\n', h);
                if (eol == std::string_view::npos) eol = source.size();
                auto [tb, te] = trim_range(source, h, eol);
                Segment seg;
                seg.kind = SegmentKind::Heading;
                seg.begin = pos;
                seg.end = te > tb ? te : h;
                seg.heading_level = level;
                seg.heading_title = std::string(source.substr(tb, te - tb));
                doc.segments.push_back(std::move(seg));
                pos = eol;
                text_from = pos;
                at_line_start = false;  // the newline itself re-arms it
                continue;
            }
        }

        if (c == '$') {
            flush_text(pos);
            const bool display = pos + 1 < source.size() && source[pos + 1] == '$';
            const std::size_t open_len = display ? 2 : 1;
            const std::size_t body = pos + open_len;
            const std::size_t close =
                display ? source.find("$$", body) : source.find('$', body);
            if (close == std::string_view::npos)
                throw ParseError(display ? "unterminated display math ($$ without closing $$)"
                                         : "unterminated inline math ($ without closing $)",
                                 pos);
            Segment seg;
            seg.kind = SegmentKind::Formula;
            seg.begin = pos;
            seg.end = close + open_len;
            seg.formula_source = std::string(source.substr(body, close - body));
            try {
                seg.ast = apply_rewrite_rules(parse_formula(seg.formula_source), config.rules);
            } catch (const FormulaError& e) {
                seg.parse_error =
                    std::string(e.what()) + " (formula offset " + std::to_string(e.offset()) + ")";
            }
            doc.segments.push_back(std::move(seg));
            pos = close + open_len;
            text_from = pos;
            at_line_start = false;
            continue;
        }

        if (source.compare(pos, 6, "![fig:") == 0) {
            flush_text(pos);
            std::size_t close = source.find(']', pos);
            if (close == std::string_view::npos)
                throw ParseError("malformed figure directive '" +
                                     std::string(source.substr(pos)) + "': missing ']'",
                                 pos);
            Segment seg;
            seg.kind = SegmentKind::Figure;
            seg.begin = pos;
            seg.end = close + 1;
            seg.figure = parse_figure_directive(source.substr(pos + 6, close - pos - 6),
                                                source.substr(pos, close + 1 - pos), pos);
            doc.segments.push_back(std::move(seg));
            pos = close + 1;
            text_from = pos;
            at_line_start = false;
            continue;
        }

        at_line_start = c == '\n';
        ++pos;
    }
    flush_text(source.size());

    classify_zones(doc, config.zone_patterns);
    return doc;
}

void classify_zones(Document& doc, const std::vector<std::string>& patterns) {
    std::vector<std::string> folded;
    folded.reserve(patterns.size());
    for (const auto& p : patterns) folded.push_back(utf8::fold_copy(p));

    std::optional<int> zone_level;
    for (auto& seg : doc.segments) {
        if (seg.kind == SegmentKind::Heading) {
            if (zone_level && seg.heading_level <= *zone_level) zone_level.reset();
            if (!zone_level) {
                const std::string title = utf8::fold_copy(seg.heading_title);
                for (const auto& p : folded) {
                    if (!p.empty() && title.find(p) != std::string::npos) {
                        zone_level = seg.heading_level;
                        break;
                    }
                }
            }
        }
        seg.excluded = zone_level.has_value();
    }
}

}  // namespace simdex
