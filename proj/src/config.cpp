#include "simdex/config.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "simdex/errors.hpp"
#include "simdex/utf8.hpp"

namespace simdex {

namespace {

constexpr const char* kDefaultStopTerms[] = {
    "элементарная функция",
    "непрерывная функция",
    "скалярное произведение",
    "обыкновенное дифференциальное уравнение",
    "уравнение лапласа",
    "задача коши",
    "первая краевая задача",
    "метод коллокаций",
    "метод сращиваемых асимптотических разложений",
    "метод фурье",
    "теорема существования и единственности",
    "диффузионный пограничный слой",
    "автомодельное решение",
    "число рейнольдса",
    "евклидово пространство",
};

constexpr const char* kDefaultZonePatterns[] = {
    "references",  "bibliography",   "literature",    "литература",
    "acknowledg",  "благодарност",   "keywords",      "ключевые слова",
    "affiliation", "сведения об авторах", "funding",  "финансирован",
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

template <typename Fn>
void for_each_config_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0, line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) fn(line, line_no);
    }
}

}  // namespace

const StopTermDictionary& default_stop_terms() {
    static const StopTermDictionary dict = [] {
        StopTermDictionary d;
        for (const char* term : kDefaultStopTerms) d.add(term);
        return d;
    }();
    return dict;
}

const std::vector<std::string>& default_zone_patterns() {
    static const std::vector<std::string> patterns(std::begin(kDefaultZonePatterns),
                                                   std::end(kDefaultZonePatterns));
    return patterns;
}

EngineConfig EngineConfig::defaults() {
    EngineConfig cfg;
    cfg.stop_terms = default_stop_terms();
    cfg.zone_patterns = default_zone_patterns();
    cfg.rules = default_rewrite_rules();
    return cfg;
}

std::vector<std::string> parse_zone_patterns(std::string_view text) {
    std::vector<std::string> out;
    for_each_config_line(text, [&out](std::string_view line, std::size_t) {
        out.push_back(utf8::fold_copy(line));
    });
    return out;
}

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

void apply_config_file(EngineConfig& cfg, const std::string& path) {
    const std::string text = read_file_or_throw(path);
    for_each_config_line(text, [&cfg, &path](std::string_view line, std::size_t line_no) {
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key == "mode") {
            if (value == "strict")
                cfg.mode = MatchMode::Strict;
            else if (value == "alpha")
                cfg.mode = MatchMode::Alpha;
            else
                throw ConfigError(path + ": mode must be strict or alpha, got \"" + value + "\"");
        } else if (key == "min-run") {
            int n = 0;
            try {
                n = std::stoi(value);
            } catch (...) {
                throw ConfigError(path + ": min-run must be an integer");
            }
            if (n < 1) throw ConfigError(path + ": min-run must be >= 1");
            cfg.min_run_length = n;
        } else if (key == "weight-ratio") {
            double r = 0;
            try {
                r = std::stod(value);
            } catch (...) {
                throw ConfigError(path + ": weight-ratio must be a number");
            }
            if (r <= 0) throw ConfigError(path + ": weight-ratio must be positive");
            cfg.weights.formula = r;
            cfg.weights.text = 1.0;
        } else if (key == "stop-terms") {
            cfg.stop_terms = StopTermDictionary::from_text(read_file_or_throw(value));
        } else if (key == "exclude-zones") {
            cfg.zone_patterns = parse_zone_patterns(read_file_or_throw(value));
        } else if (key == "norm-rules") {
            cfg.rules = parse_rewrite_rules(read_file_or_throw(value));
        } else {
            throw ConfigError(path + ": unknown key \"" + key + "\"");
        }
    });
}

}  // namespace simdex
