#include "simdex/text_match.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "simdex/errors.hpp"
#include "simdex/utf8.hpp"

namespace simdex {

namespace {

constexpr std::size_t kMaxTermWords = 8;

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto d = utf8::decode(s, pos);
        if (d.width == 0) {  // stray byte; skip it
            pos += 1;
            continue;
        }
        if (utf8::is_word_char(d.cp)) {
            utf8::append(cur, utf8::fold(d.cp));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
        pos += d.width;
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

// --- suffix automaton over int-coded tokens -------------------------------

struct SamState {
    std::map<int, int> next;
    int link = -1;
    int len = 0;
    long long end_pos = -1;  // end of one occurrence in the B stream
};

class SuffixAutomaton {
public:
    SuffixAutomaton() { states_.push_back({}); }

    void extend(int token, long long pos) {
        int cur = static_cast<int>(states_.size());
        states_.push_back({});
        states_[cur].len = states_[last_].len + 1;
        states_[cur].end_pos = pos;
        int p = last_;
        while (p != -1 && !states_[p].next.count(token)) {
            states_[p].next[token] = cur;
            p = states_[p].link;
        }
        if (p == -1) {
            states_[cur].link = 0;
        } else {
            int q = states_[p].next[token];
            if (states_[p].len + 1 == states_[q].len) {
                states_[cur].link = q;
            } else {
                int clone = static_cast<int>(states_.size());
                states_.push_back(states_[q]);
                states_[clone].len = states_[p].len + 1;
                while (p != -1 && states_[p].next[token] == q) {
                    states_[p].next[token] = clone;
                    p = states_[p].link;
                }
                states_[q].link = clone;
                states_[cur].link = clone;
            }
        }
        last_ = cur;
    }

    const SamState& at(int i) const { return states_[i]; }

    // One step of the matching-statistics walk: from (state, len), consume
    // token; returns the new pair with len = longest B substring ending here.
    std::pair<int, int> step(int state, int len, int token) const {
        while (state != 0 && !states_[state].next.count(token)) {
            state = states_[state].link;
            len = states_[state].len;
        }
        auto it = states_[state].next.find(token);
        if (it == states_[state].next.end()) return {0, 0};
        return {it->second, len + 1};
    }

private:
    std::vector<SamState> states_;
    int last_ = 0;
};

}  // namespace

void StopTermDictionary::add(std::string_view term) {
    auto words = split_words(term);
    if (words.empty()) throw ConfigError("stop term with no words: \"" + std::string(term) + "\"");
    if (words.size() > kMaxTermWords)
        throw ConfigError("stop term longer than 8 words: \"" + std::string(term) + "\"");
    if (std::find(entries.begin(), entries.end(), words) != entries.end()) return;
    entries.push_back(std::move(words));
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
}

StopTermDictionary StopTermDictionary::from_text(std::string_view text) {
    StopTermDictionary dict;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!utf8::is_space(static_cast<unsigned char>(c))) blank = false;
        if (!blank) dict.add(line);
    }
    return dict;
}

std::vector<bool> apply_stop_terms(const std::vector<std::string>& words,
                                   const StopTermDictionary& dict) {
    std::vector<bool> masked(words.size(), false);
    if (dict.empty()) return masked;
    std::size_t i = 0;
    while (i < words.size()) {
        std::size_t hit = 0;  // entries are longest-first, so first hit wins
        for (const auto& entry : dict.entries) {
            if (entry.size() > words.size() - i) continue;
            if (std::equal(entry.begin(), entry.end(), words.begin() + i)) {
                hit = entry.size();
                break;
            }
        }
        if (hit == 0) {
            ++i;
        } else {
            for (std::size_t k = 0; k < hit; ++k) masked[i + k] = true;
            i += hit;
        }
    }
    return masked;
}

std::vector<TokenRun> find_matched_runs(const std::vector<std::vector<std::string>>& a_chunks,
                                        const std::vector<std::vector<std::string>>& b_chunks,
                                        int min_run_length) {
    std::vector<TokenRun> runs;
    if (min_run_length < 1) min_run_length = 1;

    std::unordered_map<std::string, int> ids;
    auto id_of = [&ids](const std::string& w) {
        auto [it, fresh] = ids.emplace(w, static_cast<int>(ids.size()));
        return it->second;
    };

    // B stream: chunks joined by unique negative separators so no match can
    // straddle a chunk boundary. Remember each position's (chunk, offset).
    SuffixAutomaton sam;
    std::vector<std::pair<std::size_t, std::size_t>> b_pos_map;
    long long stream_pos = 0;
    int separator = -1;
    bool b_empty = true;
    for (std::size_t c = 0; c < b_chunks.size(); ++c) {
        if (c > 0) {
            sam.extend(separator--, stream_pos);
            b_pos_map.emplace_back(0, 0);
            ++stream_pos;
        }
        for (std::size_t k = 0; k < b_chunks[c].size(); ++k) {
            sam.extend(id_of(b_chunks[c][k]), stream_pos);
            b_pos_map.emplace_back(c, k);
            ++stream_pos;
            b_empty = false;
        }
    }
    if (b_empty) return runs;

    for (std::size_t c = 0; c < a_chunks.size(); ++c) {
        const auto& chunk = a_chunks[c];
        std::vector<int> ms(chunk.size(), 0);       // longest match ending at i
        std::vector<int> ms_state(chunk.size(), 0);  // automaton state there
        int state = 0, len = 0;
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            auto it = ids.find(chunk[i]);
            if (it == ids.end()) {
                state = 0;
                len = 0;
            } else {
                std::tie(state, len) = sam.step(state, len, it->second);
            }
            ms[i] = len;
            ms_state[i] = state;
        }
        // A run ending at i is maximal unless the run ending at i+1 extends
        // it (which needs ms[i+1] = ms[i] + 1).
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            if (ms[i] < min_run_length) continue;
            if (i + 1 < chunk.size() && ms[i + 1] == ms[i] + 1) continue;
            TokenRun run;
            run.a_chunk = c;
            run.a_end = i + 1;
            run.a_begin = i + 1 - static_cast<std::size_t>(ms[i]);
            long long b_end = sam.at(ms_state[i]).end_pos;
            long long b_start = b_end - ms[i] + 1;
            run.b_chunk = b_pos_map[static_cast<std::size_t>(b_start)].first;
            run.b_begin = b_pos_map[static_cast<std::size_t>(b_start)].second;
            runs.push_back(run);
        }
    }
    return runs;
}

long long matched_token_count(const std::vector<TokenRun>& runs) {
    std::map<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>> by_chunk;
    for (const auto& r : runs) by_chunk[r.a_chunk].emplace_back(r.a_begin, r.a_end);
    long long total = 0;
    for (auto& [chunk, spans] : by_chunk) {
        std::sort(spans.begin(), spans.end());
        std::size_t covered_to = 0;
        bool any = false;
        for (const auto& [b, e] : spans) {
            if (!any || b >= covered_to) {
                total += static_cast<long long>(e - b);
                covered_to = e;
                any = true;
            } else if (e > covered_to) {
                total += static_cast<long long>(e - covered_to);
                covered_to = e;
            }
        }
    }
    return total;
}

}  // namespace simdex
