#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semidx/conceptid.hpp"
#include "semidx/weighting.hpp"
#include "semidx/wsd.hpp"

namespace semidx {

enum class CorpusFormat : std::uint8_t { TimeMagazine, DirOfText };

/// Semantic: concepts + orphan keywords. Classic: lemmatized keywords only.
enum class Representation : std::uint8_t { Semantic = 0, Classic = 1 };

std::string_view representation_name(Representation r);

struct Corpus {
    std::vector<std::pair<std::string, std::string>> docs;  // (doc_id, text), stable order
};

/// TimeMagazine: records delimited by `*TEXT <id> ...` headers, terminated
/// by `*STOP`. DirOfText: one document per regular file, id = file name.
Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format);

/// Query files: either `*FIND <id>` records (same family as the TimeMagazine
/// corpus format) or one `qid<TAB>text` per line.
std::vector<std::pair<std::string, std::string>> load_queries(
    const std::filesystem::path& path);

/// The loaded stores a document walks through.
struct Pipeline {
    const LexicalDb* db = nullptr;
    const DomainDb* domains = nullptr;
    const InformationContentTable* ic = nullptr;
    const StopwordList* stopwords = nullptr;
    const PosTagger* tagger = nullptr;
    const CollocationLexicon* collocations = nullptr;
};

struct DocAnalysis {
    std::string doc_id;
    IdentifiedTerms terms;
    DisambiguationResult disamb;  // empty in classic mode
    std::map<IndexUnit, double> raw_tf;
};

DocAnalysis analyze_document(const Pipeline& pipe, std::string doc_id, std::string_view text,
                             Representation representation);

struct DocumentVector {
    std::string doc_id;
    std::map<IndexUnit, double> weights;  // no zero entries
    double norm = 0.0;
};

struct Index {
    static constexpr std::uint32_t kFormatVersion = 1;

    Representation representation = Representation::Semantic;
    WeightingConfig weighting;
    std::string config_text;  // snapshot of the engine config in force

    std::vector<std::string> doc_ids;  // corpus order
    std::map<std::string, DocumentVector> vectors;
    std::map<IndexUnit, std::vector<std::pair<std::string, double>>> postings;
    CollectionStats stats;
};

/// Pass 1 over the whole corpus: analysis plus alpha-independent semantics.
std::vector<DocSemantics> corpus_semantics(const Pipeline& pipe, const Corpus& corpus,
                                           const WeightingConfig& cfg,
                                           Representation representation);

/// Pass 2: thresholds, collection stats, final weights, postings.
Index assemble_index(const std::vector<DocSemantics>& docs, Representation representation,
                     const WeightingConfig& cfg, std::string config_text);

Index build_index(const Pipeline& pipe, const Corpus& corpus, const WeightingConfig& cfg,
                  Representation representation, std::string config_text = {});

/// Versioned binary file plus a plain-text `<path>.manifest` sidecar.
void save_index(const Index& index, const std::filesystem::path& path);
Index load_index(const std::filesystem::path& path);

struct SearchResult {
    std::vector<std::pair<std::string, double>> ranked;  // (doc_id, cosine)
    bool empty_query = false;  // every query term was filtered out
};

/// Query goes through the same pipeline; its idc/df stats come from the
/// index. Cosine-ranked, ties by ascending doc_id, zero scores excluded.
SearchResult search(const Index& index, const Pipeline& pipe, std::string_view query_text,
                    std::size_t k);

/// The query-side vector search() scores with; exposed for inspection.
std::map<IndexUnit, double> query_vector(const Index& index, const Pipeline& pipe,
                                         std::string_view query_text);

/// Disambiguation cache for weight sweeps: stores per-document semantics
/// keyed by a hash of the corpus and the loaded stores.
void save_semantics_cache(const std::filesystem::path& path, std::uint64_t key,
                          const std::vector<DocSemantics>& docs);
std::optional<std::vector<DocSemantics>> load_semantics_cache(
    const std::filesystem::path& path, std::uint64_t key);

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 14695981039346656037ull);
std::uint64_t fnv1a64_file(const std::filesystem::path& path, std::uint64_t seed);

}  // namespace semidx
