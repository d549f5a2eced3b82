#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "semidx/lexdb.hpp"
#include "semidx/textprep.hpp"

namespace semidx {

enum class TermKind : std::uint8_t { Collocation, Simple, Orphan };

std::string_view term_kind_name(TermKind kind);

struct Occurrence {
    std::size_t sentence_idx = 0;
    std::size_t position = 0;  // first token index
    std::size_t span = 1;      // tokens covered (>= 2 for collocations)
};

struct TermInstance {
    std::string lemma;  // base form; underscore-joined for collocations
    Pos pos{};
    TermKind kind{};
    std::vector<Occurrence> occurrences;
};

/// (lemma, pos) identifies a term within one document.
struct TermKey {
    std::string lemma;
    Pos pos{};
    auto operator<=>(const TermKey&) const = default;
};

inline TermKey key_of(const TermInstance& t) { return {t.lemma, t.pos}; }

struct CollocationEntry {
    std::string lemma;     // full underscore-joined form
    std::size_t size = 0;  // token count
    Pos pos{};             // Noun preferred on multi-POS entries
};

/// All multiword WordNet lemmas indexed by first word, each bucket sorted
/// by decreasing size then lexicographically.
class CollocationLexicon {
  public:
    static CollocationLexicon build(const LexicalDb& db);

    const std::vector<CollocationEntry>* candidates(std::string_view first_word) const;
    std::size_t size() const { return count_; }

  private:
    std::map<std::string, std::vector<CollocationEntry>> by_first_word_;
    std::size_t count_ = 0;
};

struct IdentifiedTerms {
    std::vector<TermInstance> expressions;  // collocations
    std::vector<TermInstance> simple;
    std::vector<TermInstance> orphans;

    const TermInstance* find(const TermKey& key) const;
};

/// Table-scan term identification: longest collocation match first, then
/// simple word / orphan classification. Stopwords are skipped for set
/// membership but do participate in local expressions.
IdentifiedTerms identify_terms(std::span<const TaggedToken> doc, const CollocationLexicon& lex,
                               const LexicalDb& db);

struct LocalContext {
    std::size_t sentence_idx = 0;
    std::set<std::string> terms;  // lemmas of index terms in the sentence
};

struct GlobalContext {
    std::string lemma;
    Pos pos{};
    std::set<std::string> terms;  // union of local contexts of same-POS instances
};

struct Contexts {
    std::map<std::size_t, LocalContext> local;
    std::map<TermKey, GlobalContext> global;
};

Contexts build_contexts(const IdentifiedTerms& terms);

}  // namespace semidx
