#include "semidx/textprep.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>

namespace semidx {

namespace {

bool is_token_char(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;  // keep UTF-8 continuation bytes together
}

bool is_upper(unsigned char c) { return std::isupper(c) != 0; }

char to_lower(unsigned char c) { return static_cast<char>(std::tolower(c)); }

// Abbreviations whose trailing period does not end a sentence.
const std::unordered_set<std::string>& abbreviations() {
    static const std::unordered_set<std::string> set = {
        "mr.",   "mrs.",  "ms.",   "dr.",   "prof.", "st.",   "jr.",  "sr.",  "rev.",
        "gen.",  "col.",  "maj.",  "capt.", "lt.",   "sgt.",  "sen.", "rep.", "gov.",
        "pres.", "u.s.",  "u.n.",  "u.k.",  "e.g.",  "i.e.",  "etc.", "vs.",  "inc.",
        "ltd.",  "co.",   "corp.", "no.",   "fig.",  "jan.",  "feb.", "mar.", "apr.",
        "jun.",  "jul.",  "aug.",  "sep.",  "sept.", "oct.",  "nov.", "dec.", "mt.",
        "ft.",   "a.m.",  "p.m.",  "dept.", "est.",  "approx."};
    return set;
}

// Closed-class words carry no content POS.
const std::unordered_set<std::string>& closed_class() {
    static const std::unordered_set<std::string> set = {
        // determiners
        "the", "a", "an", "this", "that", "these", "those", "each", "every", "either",
        "neither", "some", "any", "no", "all", "both", "such",
        // pronouns
        "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them",
        "my", "your", "his", "its", "our", "their", "mine", "yours", "hers", "ours",
        "theirs", "myself", "yourself", "himself", "herself", "itself", "ourselves",
        "themselves", "who", "whom", "whose", "which", "what", "someone", "anyone",
        "everyone", "something", "anything", "everything", "nothing", "nobody",
        // prepositions
        "of", "in", "on", "at", "by", "for", "with", "about", "against", "between",
        "into", "through", "during", "before", "after", "above", "below", "to", "from",
        "up", "down", "out", "off", "over", "under", "onto", "upon", "within", "without",
        "toward", "towards", "among", "across", "behind", "beyond", "near", "since",
        "until", "per", "via",
        // conjunctions
        "and", "or", "but", "nor", "so", "yet", "if", "because", "although", "though",
        "while", "whereas", "unless", "whether", "than", "as",
        // auxiliaries
        "is", "am", "are", "was", "were", "be", "been", "being", "do", "does", "did",
        "have", "has", "had", "will", "would", "shall", "should", "can", "could", "may",
        "might", "must", "not"};
    return set;
}

bool is_number(std::string_view norm) {
    bool digit = false;
    for (unsigned char c : norm) {
        if (std::isdigit(c)) {
            digit = true;
        } else if (c != '-' && c != '\'' && c != ',') {
            return false;
        }
    }
    return digit;
}

}  // namespace

StopwordList StopwordList::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stopword list " + path.string());
    StopwordList list;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::transform(line.begin(), line.end(), line.begin(),
                       [](unsigned char c) { return to_lower(c); });
        list.words_.insert(line);
    }
    return list;
}

std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    std::size_t i = 0;
    auto flush = [&](std::size_t end) {
        for (std::size_t k = start; k < end; ++k) {
            if (is_token_char(static_cast<unsigned char>(text[k]))) {
                out.emplace_back(start, end);
                break;
            }
        }
        start = end;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') {
            ++i;
            continue;
        }
        std::size_t punct_end = i;
        while (punct_end < text.size()
               && (text[punct_end] == '.' || text[punct_end] == '!' || text[punct_end] == '?'))
            ++punct_end;
        std::size_t ws = punct_end;
        while (ws < text.size() && std::isspace(static_cast<unsigned char>(text[ws]))) ++ws;
        bool boundary = ws > punct_end && ws < text.size()
                        && is_upper(static_cast<unsigned char>(text[ws]));
        if (boundary && c == '.' && punct_end == i + 1) {
            // word ending at the period, dots included: "mr." or "u.s."
            std::size_t w = i;
            while (w > start) {
                unsigned char prev = static_cast<unsigned char>(text[w - 1]);
                if (is_token_char(prev) || prev == '.') --w;
                else break;
            }
            std::string word(text.substr(w, i + 1 - w));
            std::transform(word.begin(), word.end(), word.begin(),
                           [](unsigned char ch) { return to_lower(ch); });
            if (abbreviations().count(word)) boundary = false;
        }
        if (boundary) {
            flush(punct_end);
            i = ws;
        } else {
            i = punct_end;
        }
    }
    flush(text.size());
    return out;
}

std::vector<Token> tokenize(std::string_view text, const StopwordList& stopwords) {
    std::vector<Token> tokens;
    auto sentences = split_sentences(text);
    std::size_t position = 0;
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        auto [begin, end] = sentences[s];
        std::size_t i = begin;
        while (i < end) {
            if (!is_token_char(static_cast<unsigned char>(text[i]))) {
                ++i;
                continue;
            }
            std::size_t tok_start = i;
            while (i < end) {
                unsigned char c = static_cast<unsigned char>(text[i]);
                if (is_token_char(c)) {
                    ++i;
                } else if ((c == '-' || c == '\'') && i > tok_start && i + 1 < end
                           && is_token_char(static_cast<unsigned char>(text[i + 1]))) {
                    ++i;  // internal hyphen/apostrophe
                } else {
                    break;
                }
            }
            Token tok;
            tok.surface = std::string(text.substr(tok_start, i - tok_start));
            tok.norm.reserve(tok.surface.size());
            for (unsigned char c : tok.surface) tok.norm.push_back(to_lower(c));
            tok.sentence_idx = s;
            tok.position = position++;
            tok.is_stopword = stopwords.contains(tok.norm);
            tokens.push_back(std::move(tok));
        }
    }
    return tokens;
}

std::vector<TaggedToken> LexiconTagger::tag(std::span<const Token> sentence) const {
    std::vector<TaggedToken> out;
    out.reserve(sentence.size());
    for (const Token& tok : sentence) {
        TaggedToken tagged{tok, std::nullopt};
        if (closed_class().count(tok.norm) || is_number(tok.norm)) {
            out.push_back(std::move(tagged));
            continue;
        }
        std::array<std::uint64_t, 4> score{};
        std::array<bool, 4> has{};
        for (Pos pos : kAllPos) {
            auto bases = db_->morphy(tok.norm, pos);
            if (bases.empty()) continue;
            has[pos_index(pos)] = true;
            score[pos_index(pos)] = db_->entry_tagged_count(bases.front(), pos);
        }
        std::vector<Pos> best;
        std::uint64_t best_score = 0;
        for (Pos pos : kAllPos) {
            if (!has[pos_index(pos)]) continue;
            std::uint64_t s = score[pos_index(pos)];
            if (best.empty() || s > best_score) {
                best = {pos};
                best_score = s;
            } else if (s == best_score) {
                best.push_back(pos);
            }
        }
        if (best.empty()) {
            tagged.pos = Pos::Noun;  // orphan candidate
        } else if (best.size() == 1) {
            tagged.pos = best.front();
        } else {
            auto tied = [&](Pos p) {
                return std::find(best.begin(), best.end(), p) != best.end();
            };
            if (tok.norm.ends_with("ly") && tied(Pos::Adverb)) {
                tagged.pos = Pos::Adverb;
            } else if ((tok.norm.ends_with("ing") || tok.norm.ends_with("ed"))
                       && tied(Pos::Verb)) {
                tagged.pos = Pos::Verb;
            } else {
                tagged.pos = best.front();  // kAllPos order: noun first
            }
        }
        out.push_back(std::move(tagged));
    }
    return out;
}

ExternalTagger ExternalTagger::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open tag file " + path.string());
    ExternalTagger tagger;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw MalformedLine(path.string(), line_no, "expected token<TAB>POS");
        std::string token = line.substr(0, tab);
        std::string pos_str = line.substr(tab + 1);
        std::optional<Pos> pos;
        if (pos_str == "noun" || pos_str == "n") pos = Pos::Noun;
        else if (pos_str == "verb" || pos_str == "v") pos = Pos::Verb;
        else if (pos_str == "adj" || pos_str == "a") pos = Pos::Adjective;
        else if (pos_str == "adv" || pos_str == "r") pos = Pos::Adverb;
        else if (pos_str != "-")
            throw MalformedLine(path.string(), line_no, "unknown POS " + pos_str);
        tagger.tags_.emplace_back(std::move(token), pos);
    }
    return tagger;
}

std::vector<TaggedToken> ExternalTagger::tag(std::span<const Token> sentence) const {
    std::vector<TaggedToken> out;
    out.reserve(sentence.size());
    for (const Token& tok : sentence) {
        if (tok.position >= tags_.size())
            throw Error("external tags exhausted at token " + tok.norm);
        const auto& [text, pos] = tags_[tok.position];
        if (text != tok.norm)
            throw Error("external tag mismatch: expected " + tok.norm + ", file has " + text);
        out.push_back({tok, pos});
    }
    return out;
}

std::vector<TaggedToken> tag_pos(std::span<const Token> sentence, const LexicalDb& db) {
    return LexiconTagger(db).tag(sentence);
}

std::vector<TaggedToken> prepare_text(std::string_view text, const StopwordList& stopwords,
                                      const PosTagger& tagger) {
    auto tokens = tokenize(text, stopwords);
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t j = i;
        while (j < tokens.size() && tokens[j].sentence_idx == tokens[i].sentence_idx) ++j;
        auto tagged = tagger.tag(std::span<const Token>(tokens.data() + i, j - i));
        for (auto& t : tagged) out.push_back(std::move(t));
        i = j;
    }
    return out;
}

}  // namespace semidx
