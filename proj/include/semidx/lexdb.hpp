#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semidx/errors.hpp"
#include "semidx/pos.hpp"

namespace semidx {

/// Stable database key: the (pos, byte offset) pair native to the WordNet
/// flat files.
struct SynsetId {
    Pos pos{};
    std::uint32_t offset{};
    auto operator<=>(const SynsetId&) const = default;
};

struct SynsetIdHash {
    std::size_t operator()(const SynsetId& id) const noexcept {
        return (static_cast<std::size_t>(id.offset) << 2) | pos_index(id.pos);
    }
};

/// "08420278-n" style key used by the domain mapping files and debug dumps.
std::string to_string(const SynsetId& id);

struct Synset {
    SynsetId id;
    std::vector<std::string> lemmas;  // lowercase, multiwords underscore-joined
    std::string gloss;
    std::vector<SynsetId> hypernyms;  // empty for roots and for adj/adv
    std::uint64_t tagged_count = 0;   // sum of per-sense corpus counts
};

struct SenseList {
    std::string lemma;
    Pos pos{};
    std::vector<SynsetId> senses;  // WordNet sense-number order, most frequent first
};

/// Which files to load. Index/data files name their own POS per line; the
/// POS of an exception file is inferred from its name (noun.exc, verb.exc,
/// adj.exc, adv.exc). sense_index is the optional index.sense file that
/// carries the per-sense corpus tag counts.
struct WordNetPaths {
    std::vector<std::filesystem::path> index_files;
    std::vector<std::filesystem::path> data_files;
    std::vector<std::filesystem::path> exception_files;
    std::optional<std::filesystem::path> sense_index;

    /// Picks up the standard file names present under dir.
    static WordNetPaths from_dir(const std::filesystem::path& dir);
};

/// Read-only in-memory WordNet store. Immutable after load; shareable by
/// any number of concurrent readers.
class LexicalDb {
  public:
    static LexicalDb load(const WordNetPaths& paths);

    const Synset& synset(SynsetId id) const;  // throws UnknownSynset
    const Synset* find_synset(SynsetId id) const noexcept;

    /// Senses in sense-number order; empty when the lemma has no entry.
    SenseList lookup_senses(std::string_view lemma, Pos pos) const;
    bool has_entry(std::string_view lemma, Pos pos) const;

    /// Sum of tagged counts over the senses of (lemma, pos); 0 when absent.
    std::uint64_t entry_tagged_count(std::string_view lemma, Pos pos) const;

    /// Exception-list lookup plus the documented detachment rules, filtered
    /// to lemmas that actually have an entry for pos. The surface itself
    /// comes first when it is already an entry.
    std::vector<std::string> morphy(std::string_view surface, Pos pos) const;

    /// 1 + minimum hypernym-path length to a root; roots are depth 1.
    int hypernym_depth(SynsetId id) const;

    /// Deepest common ancestor, or nullopt when the two synsets share none
    /// (distinct roots, or a POS without a hierarchy and a != b).
    /// Selection is by longest-path depth, which is strictly monotone along
    /// hypernym edges, so lcs(x, x) == x and lcs(x, parent) == parent hold
    /// under multiple inheritance too; min-path depth breaks ties.
    std::optional<SynsetId> least_common_subsumer(SynsetId a, SynsetId b) const;

    /// Hypernym closure of id, including id itself.
    std::vector<SynsetId> ancestors(SynsetId id) const;

    std::size_t synset_count() const;
    std::size_t synset_count(Pos pos) const;

    void for_each_synset(const std::function<void(const Synset&)>& fn) const;
    void for_each_entry(
        const std::function<void(const std::string& lemma, Pos pos,
                                 const std::vector<SynsetId>& senses)>& fn) const;

  private:
    LexicalDb() = default;

    struct Entry {
        std::vector<SynsetId> senses;
    };

    const Entry* find_entry(std::string_view lemma, Pos pos) const;
    void validate_hierarchy();  // dangling links, POS purity, acyclicity, depths

    std::array<std::unordered_map<std::uint32_t, Synset>, 4> synsets_;
    std::array<std::unordered_map<std::string, Entry>, 4> entries_;
    std::array<std::unordered_map<std::string, std::vector<std::string>>, 4> exceptions_;
    std::unordered_map<SynsetId, int, SynsetIdHash> depths_;      // min path
    std::unordered_map<SynsetId, int, SynsetIdHash> max_depths_;  // longest path
};

}  // namespace semidx
