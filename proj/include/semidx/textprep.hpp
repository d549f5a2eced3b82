#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "semidx/lexdb.hpp"

namespace semidx {

struct Token {
    std::string surface;
    std::string norm;  // lowercased
    std::size_t sentence_idx = 0;
    std::size_t position = 0;  // token index within the document
    bool is_stopword = false;
};

/// pos is empty for closed-class words (determiners, prepositions,
/// pronouns, conjunctions, numbers).
struct TaggedToken {
    Token token;
    std::optional<Pos> pos;
};

class StopwordList {
  public:
    StopwordList() = default;

    /// One word per line, '#' comments.
    static StopwordList load(const std::filesystem::path& path);

    bool contains(std::string_view norm) const {
        return words_.count(std::string(norm)) > 0;
    }
    std::size_t size() const { return words_.size(); }

  private:
    std::unordered_set<std::string> words_;
};

/// Byte ranges of sentences: split after `.` `!` `?` followed by whitespace
/// and a capital, with an abbreviation guard on `.`.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text);

/// Maximal runs of letters/digits with internal hyphens and apostrophes
/// preserved; sentence indices from split_sentences; is_stopword filled
/// from the given list.
std::vector<Token> tokenize(std::string_view text, const StopwordList& stopwords);

class PosTagger {
  public:
    virtual ~PosTagger() = default;
    /// Tags the tokens of one sentence.
    virtual std::vector<TaggedToken> tag(std::span<const Token> sentence) const = 0;
};

/// Default tagger: closed-class lexicon, then the POS whose morphy base has
/// the highest summed tagged count, suffix heuristics on ties, Noun fallback
/// for unknown words.
class LexiconTagger : public PosTagger {
  public:
    explicit LexiconTagger(const LexicalDb& db) : db_(&db) {}
    std::vector<TaggedToken> tag(std::span<const Token> sentence) const override;

  private:
    const LexicalDb* db_;
};

/// Replays tags produced by an external tagger, one `token<TAB>POS` pair per
/// line in document token order; POS one of noun/verb/adj/adv/n/v/a/r or `-`
/// for closed-class words.
class ExternalTagger : public PosTagger {
  public:
    static ExternalTagger load(const std::filesystem::path& path);
    std::vector<TaggedToken> tag(std::span<const Token> sentence) const override;

  private:
    std::vector<std::pair<std::string, std::optional<Pos>>> tags_;
};

/// Convenience: LexiconTagger over one sentence.
std::vector<TaggedToken> tag_pos(std::span<const Token> sentence, const LexicalDb& db);

/// Tokenize, then tag sentence by sentence with the given tagger.
std::vector<TaggedToken> prepare_text(std::string_view text, const StopwordList& stopwords,
                                      const PosTagger& tagger);

}  // namespace semidx
