// WordNet 3.0 flat-file loader: index.pos / data.pos / pos.exc / index.sense.
// Grammar reference: wndb(5WN) and senseidx(5WN).

#include "semidx/lexdb.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <span>

namespace semidx {

namespace {

// Whitespace tokenizer used for all line grammars.
std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool parse_uint(std::string_view s, std::uint64_t& out, int base = 10) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out, base);
    return ec == std::errc{} && p == s.data() + s.size();
}

bool is_license_line(const std::string& line) {
    return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Data-file words may carry an adjective position marker: word(a), word(p), word(ip).
std::string strip_marker(std::string_view word) {
    auto open = word.rfind('(');
    if (open != std::string_view::npos && word.back() == ')') word = word.substr(0, open);
    return lowercase(word);
}

std::optional<Pos> pos_from_exception_file(const std::filesystem::path& p) {
    auto stem = p.filename().string();
    if (stem.starts_with("noun")) return Pos::Noun;
    if (stem.starts_with("verb")) return Pos::Verb;
    if (stem.starts_with("adj")) return Pos::Adjective;
    if (stem.starts_with("adv")) return Pos::Adverb;
    return std::nullopt;
}

std::ifstream open_or_throw(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("cannot open " + p.string());
    return in;
}

void chomp(std::string& line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
}

struct DetachmentRule {
    std::string_view suffix;
    std::string_view replacement;
};

// wninput(5WN) suffix detachment table.
constexpr std::array<DetachmentRule, 8> kNounRules = {{{"s", ""},
                                                       {"ses", "s"},
                                                       {"xes", "x"},
                                                       {"zes", "z"},
                                                       {"ches", "ch"},
                                                       {"shes", "sh"},
                                                       {"men", "man"},
                                                       {"ies", "y"}}};
constexpr std::array<DetachmentRule, 8> kVerbRules = {{{"s", ""},
                                                       {"ies", "y"},
                                                       {"es", "e"},
                                                       {"es", ""},
                                                       {"ed", "e"},
                                                       {"ed", ""},
                                                       {"ing", "e"},
                                                       {"ing", ""}}};
constexpr std::array<DetachmentRule, 4> kAdjRules = {
    {{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}}};

std::span<const DetachmentRule> rules_for(Pos pos) {
    switch (pos) {
        case Pos::Noun: return kNounRules;
        case Pos::Verb: return kVerbRules;
        case Pos::Adjective: return kAdjRules;
        case Pos::Adverb: return {};
    }
    return {};
}

}  // namespace

std::string to_string(const SynsetId& id) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08u-%c", id.offset, pos_letter(id.pos));
    return buf;
}

WordNetPaths WordNetPaths::from_dir(const std::filesystem::path& dir) {
    WordNetPaths paths;
    for (const char* suffix : {"noun", "verb", "adj", "adv"}) {
        auto index = dir / (std::string("index.") + suffix);
        auto data = dir / (std::string("data.") + suffix);
        auto exc = dir / (std::string(suffix) + ".exc");
        if (std::filesystem::exists(index)) paths.index_files.push_back(index);
        if (std::filesystem::exists(data)) paths.data_files.push_back(data);
        if (std::filesystem::exists(exc)) paths.exception_files.push_back(exc);
    }
    if (auto sense = dir / "index.sense"; std::filesystem::exists(sense))
        paths.sense_index = sense;
    return paths;
}

LexicalDb LexicalDb::load(const WordNetPaths& paths) {
    LexicalDb db;

    // Data files first: index entries validate against them.
    for (const auto& path : paths.data_files) {
        auto in = open_or_throw(path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            chomp(line);
            if (line.empty() || is_license_line(line)) continue;

            auto bar = line.find(" | ");
            std::string gloss = bar == std::string::npos ? "" : line.substr(bar + 3);
            auto fields = split_fields(bar == std::string::npos
                                           ? std::string_view(line)
                                           : std::string_view(line).substr(0, bar));
            auto fail = [&](const char* what) -> MalformedLine {
                return MalformedLine(path.string(), line_no, what);
            };
            if (fields.size() < 5) throw fail("truncated synset record");

            std::uint64_t offset = 0, lex_filenum = 0, w_cnt = 0;
            if (!parse_uint(fields[0], offset)) throw fail("bad synset_offset");
            if (!parse_uint(fields[1], lex_filenum)) throw fail("bad lex_filenum");
            if (fields[2].size() != 1) throw fail("bad ss_type");
            auto pos = pos_from_letter(fields[2][0]);
            if (!pos) throw fail("bad ss_type");
            if (!parse_uint(fields[3], w_cnt, 16) || w_cnt == 0) throw fail("bad w_cnt");

            Synset syn;
            syn.id = {*pos, static_cast<std::uint32_t>(offset)};
            syn.gloss = std::move(gloss);

            std::size_t f = 4;
            for (std::uint64_t w = 0; w < w_cnt; ++w) {
                if (f + 2 > fields.size()) throw fail("truncated word list");
                std::uint64_t lex_id = 0;
                if (!parse_uint(fields[f + 1], lex_id, 16)) throw fail("bad lex_id");
                syn.lemmas.push_back(strip_marker(fields[f]));
                f += 2;
            }

            std::uint64_t p_cnt = 0;
            if (f >= fields.size() || !parse_uint(fields[f], p_cnt)) throw fail("bad p_cnt");
            ++f;
            for (std::uint64_t p = 0; p < p_cnt; ++p) {
                if (f + 4 > fields.size()) throw fail("truncated pointer");
                std::string_view symbol = fields[f];
                std::uint64_t target_offset = 0, src_tgt = 0;
                if (!parse_uint(fields[f + 1], target_offset)) throw fail("bad pointer offset");
                if (fields[f + 2].size() != 1) throw fail("bad pointer pos");
                auto target_pos = pos_from_letter(fields[f + 2][0]);
                if (!target_pos) throw fail("bad pointer pos");
                if (!parse_uint(fields[f + 3], src_tgt, 16)) throw fail("bad source/target");
                if ((symbol == "@" || symbol == "@i") && pos_has_hierarchy(*pos)) {
                    if (*target_pos != *pos) throw fail("cross-POS hypernym");
                    syn.hypernyms.push_back(
                        {*target_pos, static_cast<std::uint32_t>(target_offset)});
                }
                f += 4;
            }
            // Verb frames, parsed and discarded: f_cnt then (+ f_num w_num)*.
            if (*pos == Pos::Verb && f < fields.size()) {
                std::uint64_t f_cnt = 0;
                if (!parse_uint(fields[f], f_cnt)) throw fail("bad frame count");
                ++f;
                for (std::uint64_t i = 0; i < f_cnt; ++i) {
                    if (f + 3 > fields.size() || fields[f] != "+") throw fail("bad frame");
                    f += 3;
                }
            }
            if (f != fields.size()) throw fail("trailing fields");

            auto& table = db.synsets_[pos_index(*pos)];
            if (!table.emplace(syn.id.offset, std::move(syn)).second)
                throw fail("duplicate synset offset");
        }
    }

    for (const auto& path : paths.index_files) {
        auto in = open_or_throw(path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            chomp(line);
            if (line.empty() || is_license_line(line)) continue;
            auto fields = split_fields(line);
            auto fail = [&](const char* what) -> MalformedLine {
                return MalformedLine(path.string(), line_no, what);
            };
            if (fields.size() < 6) throw fail("truncated index record");

            std::string lemma(fields[0]);
            if (fields[1].size() != 1) throw fail("bad pos");
            auto pos = pos_from_letter(fields[1][0]);
            if (!pos) throw fail("bad pos");
            std::uint64_t synset_cnt = 0, p_cnt = 0;
            if (!parse_uint(fields[2], synset_cnt) || synset_cnt == 0)
                throw fail("bad synset_cnt");
            if (!parse_uint(fields[3], p_cnt)) throw fail("bad p_cnt");
            std::size_t f = 4 + p_cnt;  // skip ptr_symbol list
            std::uint64_t sense_cnt = 0, tagsense_cnt = 0;
            if (f + 2 > fields.size()) throw fail("truncated index record");
            if (!parse_uint(fields[f], sense_cnt)) throw fail("bad sense_cnt");
            if (!parse_uint(fields[f + 1], tagsense_cnt)) throw fail("bad tagsense_cnt");
            f += 2;
            if (f + synset_cnt != fields.size()) throw fail("offset count mismatch");

            Entry entry;
            for (std::uint64_t i = 0; i < synset_cnt; ++i) {
                std::uint64_t offset = 0;
                if (!parse_uint(fields[f + i], offset)) throw fail("bad offset");
                SynsetId id{*pos, static_cast<std::uint32_t>(offset)};
                const Synset* syn = db.find_synset(id);
                if (!syn) throw DanglingPointer(lemma, to_string(id));
                if (std::find(syn->lemmas.begin(), syn->lemmas.end(), lemma)
                    == syn->lemmas.end())
                    throw fail("index lemma missing from synset");
                if (std::find(entry.senses.begin(), entry.senses.end(), id)
                    != entry.senses.end())
                    throw fail("duplicate sense offset");
                entry.senses.push_back(id);
            }
            if (!db.entries_[pos_index(*pos)].emplace(std::move(lemma), std::move(entry))
                     .second)
                throw fail("duplicate index lemma");
        }
    }

    for (const auto& path : paths.exception_files) {
        auto pos = pos_from_exception_file(path);
        if (!pos) throw Error("cannot infer POS of exception file " + path.string());
        auto in = open_or_throw(path);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            chomp(line);
            if (line.empty() || is_license_line(line)) continue;
            auto fields = split_fields(line);
            if (fields.size() < 2)
                throw MalformedLine(path.string(), line_no, "expected inflected base...");
            std::vector<std::string> bases(fields.begin() + 1, fields.end());
            db.exceptions_[pos_index(*pos)].emplace(std::string(fields[0]), std::move(bases));
        }
    }

    if (paths.sense_index) {
        auto in = open_or_throw(*paths.sense_index);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            chomp(line);
            if (line.empty() || is_license_line(line)) continue;
            auto fields = split_fields(line);
            auto fail = [&](const char* what) -> MalformedLine {
                return MalformedLine(paths.sense_index->string(), line_no, what);
            };
            if (fields.size() != 4) throw fail("expected sense_key offset sense_no tag_cnt");
            auto percent = fields[0].find('%');
            if (percent == std::string_view::npos || percent + 1 >= fields[0].size())
                throw fail("bad sense key");
            auto pos = [&]() -> std::optional<Pos> {
                switch (fields[0][percent + 1]) {
                    case '1': return Pos::Noun;
                    case '2': return Pos::Verb;
                    case '3':
                    case '5': return Pos::Adjective;
                    case '4': return Pos::Adverb;
                    default: return std::nullopt;
                }
            }();
            if (!pos) throw fail("bad ss_type in sense key");
            std::uint64_t offset = 0, sense_no = 0, tag_cnt = 0;
            if (!parse_uint(fields[1], offset)) throw fail("bad offset");
            if (!parse_uint(fields[2], sense_no)) throw fail("bad sense number");
            if (!parse_uint(fields[3], tag_cnt)) throw fail("bad tag count");
            SynsetId id{*pos, static_cast<std::uint32_t>(offset)};
            auto& table = db.synsets_[pos_index(*pos)];
            auto it = table.find(id.offset);
            if (it == table.end())
                throw DanglingPointer(std::string(fields[0]), to_string(id));
            it->second.tagged_count += tag_cnt;
        }
    }

    db.validate_hierarchy();
    return db;
}

void LexicalDb::validate_hierarchy() {
    // Dangling hypernym targets, then cycle check + depth computation by
    // iterative DFS (white/grey/black coloring).
    for (const auto& table : synsets_) {
        for (const auto& [offset, syn] : table) {
            for (const auto& parent : syn.hypernyms) {
                if (!find_synset(parent))
                    throw DanglingPointer(to_string(syn.id), to_string(parent));
            }
        }
    }

    enum class Color : std::uint8_t { White, Grey, Black };
    std::unordered_map<SynsetId, Color, SynsetIdHash> color;
    for (const auto& table : synsets_) {
        for (const auto& [offset, syn] : table) {
            if (!pos_has_hierarchy(syn.id.pos)) continue;
            if (color.count(syn.id)) continue;
            std::vector<std::pair<SynsetId, bool>> stack{{syn.id, false}};
            while (!stack.empty()) {
                auto [id, children_done] = stack.back();
                stack.pop_back();
                const Synset& node = synset(id);
                if (children_done) {
                    int depth = 1;  // roots; otherwise 1 + min over parents
                    int max_depth = 1;
                    bool first = true;
                    for (const auto& parent : node.hypernyms) {
                        int via = depths_.at(parent) + 1;
                        if (first || via < depth) depth = via;
                        max_depth = std::max(max_depth, max_depths_.at(parent) + 1);
                        first = false;
                    }
                    depths_[id] = depth;
                    max_depths_[id] = max_depth;
                    color[id] = Color::Black;
                    continue;
                }
                auto state = color.find(id);
                if (state != color.end()) {
                    if (state->second == Color::Grey) throw CycleInHierarchy(to_string(id));
                    continue;  // Black: already done
                }
                color[id] = Color::Grey;
                stack.push_back({id, true});
                for (const auto& parent : node.hypernyms) {
                    auto pstate = color.find(parent);
                    if (pstate != color.end() && pstate->second == Color::Grey)
                        throw CycleInHierarchy(to_string(parent));
                    if (pstate == color.end()) stack.push_back({parent, false});
                }
            }
        }
    }
}

const Synset& LexicalDb::synset(SynsetId id) const {
    const Synset* s = find_synset(id);
    if (!s) throw UnknownSynset(to_string(id));
    return *s;
}

const Synset* LexicalDb::find_synset(SynsetId id) const noexcept {
    const auto& table = synsets_[pos_index(id.pos)];
    auto it = table.find(id.offset);
    return it == table.end() ? nullptr : &it->second;
}

const LexicalDb::Entry* LexicalDb::find_entry(std::string_view lemma, Pos pos) const {
    const auto& table = entries_[pos_index(pos)];
    auto it = table.find(std::string(lemma));
    return it == table.end() ? nullptr : &it->second;
}

SenseList LexicalDb::lookup_senses(std::string_view lemma, Pos pos) const {
    SenseList out{std::string(lemma), pos, {}};
    if (const Entry* e = find_entry(lemma, pos)) out.senses = e->senses;
    return out;
}

bool LexicalDb::has_entry(std::string_view lemma, Pos pos) const {
    return find_entry(lemma, pos) != nullptr;
}

std::uint64_t LexicalDb::entry_tagged_count(std::string_view lemma, Pos pos) const {
    std::uint64_t total = 0;
    if (const Entry* e = find_entry(lemma, pos))
        for (const auto& id : e->senses) total += synset(id).tagged_count;
    return total;
}

std::vector<std::string> LexicalDb::morphy(std::string_view surface, Pos pos) const {
    std::vector<std::string> out;
    auto push = [&](const std::string& lemma) {
        if (!has_entry(lemma, pos)) return;
        if (std::find(out.begin(), out.end(), lemma) == out.end()) out.push_back(lemma);
    };
    push(std::string(surface));
    const auto& exc = exceptions_[pos_index(pos)];
    if (auto it = exc.find(std::string(surface)); it != exc.end())
        for (const auto& base : it->second) push(base);
    for (const auto& rule : rules_for(pos)) {
        if (surface.size() <= rule.suffix.size()) continue;
        if (!surface.ends_with(rule.suffix)) continue;
        std::string candidate(surface.substr(0, surface.size() - rule.suffix.size()));
        candidate += rule.replacement;
        push(candidate);
    }
    return out;
}

int LexicalDb::hypernym_depth(SynsetId id) const {
    if (!find_synset(id)) throw UnknownSynset(to_string(id));
    auto it = depths_.find(id);
    return it == depths_.end() ? 1 : it->second;  // adj/adv: flat, depth 1
}

std::vector<SynsetId> LexicalDb::ancestors(SynsetId id) const {
    std::vector<SynsetId> out;
    std::vector<SynsetId> frontier{id};
    std::unordered_map<SynsetId, bool, SynsetIdHash> seen;
    while (!frontier.empty()) {
        SynsetId cur = frontier.back();
        frontier.pop_back();
        if (seen.count(cur)) continue;
        seen[cur] = true;
        out.push_back(cur);
        for (const auto& parent : synset(cur).hypernyms) frontier.push_back(parent);
    }
    return out;
}

std::optional<SynsetId> LexicalDb::least_common_subsumer(SynsetId a, SynsetId b) const {
    if (!find_synset(a)) throw UnknownSynset(to_string(a));
    if (!find_synset(b)) throw UnknownSynset(to_string(b));
    if (a == b) return a;
    std::unordered_map<SynsetId, bool, SynsetIdHash> in_a;
    for (const auto& id : ancestors(a)) in_a[id] = true;
    std::optional<SynsetId> best;
    auto rank = [&](SynsetId id) {
        auto max_it = max_depths_.find(id);
        return std::make_tuple(max_it == max_depths_.end() ? 1 : max_it->second,
                               hypernym_depth(id));
    };
    for (const auto& id : ancestors(b)) {
        if (!in_a.count(id)) continue;
        if (!best || rank(id) > rank(*best) || (rank(id) == rank(*best) && id < *best)) {
            best = id;
        }
    }
    return best;
}

std::size_t LexicalDb::synset_count() const {
    std::size_t n = 0;
    for (const auto& table : synsets_) n += table.size();
    return n;
}

std::size_t LexicalDb::synset_count(Pos pos) const { return synsets_[pos_index(pos)].size(); }

void LexicalDb::for_each_synset(const std::function<void(const Synset&)>& fn) const {
    for (const auto& table : synsets_)
        for (const auto& [offset, syn] : table) fn(syn);
}

void LexicalDb::for_each_entry(
    const std::function<void(const std::string&, Pos, const std::vector<SynsetId>&)>& fn)
    const {
    for (Pos pos : kAllPos)
        for (const auto& [lemma, entry] : entries_[pos_index(pos)])
            fn(lemma, pos, entry.senses);
}

}  // namespace semidx
