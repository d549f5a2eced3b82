#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semidx/similarity.hpp"
#include "semidx/unit.hpp"

namespace semidx {

enum class Scheme : std::uint8_t { CcIdc = 0, TfIdf = 1, Bm25 = 2 };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> scheme_from_name(std::string_view name);

struct WeightingConfig {
    double alpha = 0.2;
    /// Central-concept threshold s; empty means the collection mean of cc.
    std::optional<double> absolute_threshold;
    Scheme scheme = Scheme::CcIdc;
    double bm25_k1 = 1.2;
    double bm25_b = 0.75;
    /// Sensitivity flags: raw occurrence counts instead of max-normalized
    /// tf, and plain Resnik sums instead of averaged normalized Resnik.
    bool raw_tf = false;
    bool raw_sim = false;
};

/// Per-document, alpha-independent products of pass 1: occurrence counts
/// and each concept's mean relatedness to the document's other concepts.
struct DocSemantics {
    struct Unit {
        IndexUnit unit;
        double raw_tf = 0.0;
        double sim = 0.0;  // 0 for orphans
    };
    std::string doc_id;
    std::vector<Unit> units;  // sorted by unit

    double doclen() const;
    double max_raw_tf() const;
};

struct CollectionStats {
    std::size_t doc_count = 0;
    std::map<IndexUnit, std::uint32_t> df;
    std::map<IndexUnit, std::uint32_t> central_count;  // n before the >=1 clamp
    double mean_cc = 0.0;
    double avg_doclen = 0.0;
};

/// raw / max-raw over the document's index units, in (0, 1].
double normalized_tf(double raw, double max_raw);

/// cc(C_i, d) = alpha * tf + (1 - alpha) * sim for concepts; orphans keep
/// only the tf part.
double local_centrality(const DocSemantics::Unit& unit, const DocSemantics& doc,
                        const WeightingConfig& cfg);

/// The fixed threshold s.
double centrality_threshold(const CollectionStats& stats, const WeightingConfig& cfg);

bool is_central(double cc, double threshold);

/// dc = n / N with n clamped to >= 1.
double document_centrality(const IndexUnit& unit, const CollectionStats& stats);

/// idc = N / n, the reciprocal of dc.
double inverted_document_centrality(const IndexUnit& unit, const CollectionStats& stats);

/// W = cc * idc.
double ccidc_weight(double cc, const IndexUnit& unit, const CollectionStats& stats);

/// tf*idf or Okapi BM25 over raw counts; BM25 floored at 0.
double baseline_weight(const IndexUnit& unit, double raw_tf, double doclen,
                       const CollectionStats& stats, const WeightingConfig& cfg);

/// Mean relatedness of each concept to the document's other concepts
/// (plain Resnik sums when cfg.raw_sim).
DocSemantics compute_semantics(std::string doc_id,
                               const std::map<IndexUnit, double>& raw_tf,
                               const LexicalDb& db, const InformationContentTable& ic,
                               const WeightingConfig& cfg);

/// cc per unit for one document.
std::map<IndexUnit, double> local_centralities(const DocSemantics& doc,
                                               const WeightingConfig& cfg);

/// Collection pass: N, df, doclen stats, mean cc, then central counts
/// against the resolved threshold.
CollectionStats collect_stats(const std::vector<DocSemantics>& docs,
                              const WeightingConfig& cfg);

}  // namespace semidx
