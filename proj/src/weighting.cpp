#include "semidx/weighting.hpp"

#include <algorithm>
#include <cmath>

namespace semidx {

std::string IndexUnit::to_string() const {
    if (is_concept()) return "c:" + semidx::to_string(synset());
    return "k:" + lemma();
}

IndexUnit IndexUnit::parse(std::string_view text) {
    if (text.size() < 2 || text[1] != ':') throw Error("bad index unit: " + std::string(text));
    auto body = text.substr(2);
    if (text[0] == 'k') return orphan(std::string(body));
    if (text[0] != 'c') throw Error("bad index unit: " + std::string(text));
    auto dash = body.rfind('-');
    if (dash == std::string_view::npos || dash + 2 != body.size())
        throw Error("bad index unit: " + std::string(text));
    auto pos = pos_from_letter(body[dash + 1]);
    if (!pos) throw Error("bad index unit: " + std::string(text));
    std::uint32_t offset = 0;
    for (char c : body.substr(0, dash)) {
        if (c < '0' || c > '9') throw Error("bad index unit: " + std::string(text));
        offset = offset * 10 + static_cast<std::uint32_t>(c - '0');
    }
    return of({*pos, offset});
}

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::CcIdc: return "cc-idc";
        case Scheme::TfIdf: return "tf-idf";
        case Scheme::Bm25: return "bm25";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    if (name == "cc-idc" || name == "ccidc") return Scheme::CcIdc;
    if (name == "tf-idf" || name == "tfidf") return Scheme::TfIdf;
    if (name == "bm25") return Scheme::Bm25;
    return std::nullopt;
}

double DocSemantics::doclen() const {
    double total = 0.0;
    for (const auto& u : units) total += u.raw_tf;
    return total;
}

double DocSemantics::max_raw_tf() const {
    double max = 0.0;
    for (const auto& u : units) max = std::max(max, u.raw_tf);
    return max;
}

double normalized_tf(double raw, double max_raw) {
    return max_raw > 0.0 ? raw / max_raw : 0.0;
}

double local_centrality(const DocSemantics::Unit& unit, const DocSemantics& doc,
                        const WeightingConfig& cfg) {
    double tf = cfg.raw_tf ? unit.raw_tf : normalized_tf(unit.raw_tf, doc.max_raw_tf());
    if (!unit.unit.is_concept()) return cfg.alpha * tf;
    return cfg.alpha * tf + (1.0 - cfg.alpha) * unit.sim;
}

double centrality_threshold(const CollectionStats& stats, const WeightingConfig& cfg) {
    return cfg.absolute_threshold.value_or(stats.mean_cc);
}

bool is_central(double cc, double threshold) { return cc > threshold; }

double document_centrality(const IndexUnit& unit, const CollectionStats& stats) {
    auto it = stats.central_count.find(unit);
    std::uint32_t n = it == stats.central_count.end() ? 0 : it->second;
    if (n == 0) n = 1;
    return static_cast<double>(n) / static_cast<double>(stats.doc_count);
}

double inverted_document_centrality(const IndexUnit& unit, const CollectionStats& stats) {
    return 1.0 / document_centrality(unit, stats);
}

double ccidc_weight(double cc, const IndexUnit& unit, const CollectionStats& stats) {
    return cc * inverted_document_centrality(unit, stats);
}

double baseline_weight(const IndexUnit& unit, double raw_tf, double doclen,
                       const CollectionStats& stats, const WeightingConfig& cfg) {
    if (raw_tf <= 0.0) return 0.0;
    auto it = stats.df.find(unit);
    double df = it == stats.df.end() ? 0.0 : static_cast<double>(it->second);
    double n = static_cast<double>(stats.doc_count);
    if (cfg.scheme == Scheme::TfIdf) {
        if (df <= 0.0) df = 1.0;
        return raw_tf * std::log(n / df);
    }
    double idf = std::log((n - df + 0.5) / (df + 0.5));
    double norm_len = stats.avg_doclen > 0.0 ? doclen / stats.avg_doclen : 1.0;
    double tf_part = raw_tf * (cfg.bm25_k1 + 1.0)
                     / (raw_tf + cfg.bm25_k1 * (1.0 - cfg.bm25_b + cfg.bm25_b * norm_len));
    return std::max(0.0, idf * tf_part);
}

DocSemantics compute_semantics(std::string doc_id,
                               const std::map<IndexUnit, double>& raw_tf,
                               const LexicalDb& db, const InformationContentTable& ic,
                               const WeightingConfig& cfg) {
    DocSemantics doc;
    doc.doc_id = std::move(doc_id);
    doc.units.reserve(raw_tf.size());
    for (const auto& [unit, tf] : raw_tf) doc.units.push_back({unit, tf, 0.0});

    std::vector<const DocSemantics::Unit*> concepts;
    for (const auto& u : doc.units)
        if (u.unit.is_concept()) concepts.push_back(&u);

    for (auto& u : doc.units) {
        if (!u.unit.is_concept()) continue;
        double sum = 0.0;
        std::size_t others = 0;
        for (const auto* other : concepts) {
            if (other->unit == u.unit) continue;
            ++others;
            sum += cfg.raw_sim ? resnik(u.unit.synset(), other->unit.synset(), db, ic)
                               : resnik_norm(u.unit.synset(), other->unit.synset(), db, ic);
        }
        u.sim = cfg.raw_sim ? sum : sum / static_cast<double>(std::max<std::size_t>(1, others));
    }
    return doc;
}

std::map<IndexUnit, double> local_centralities(const DocSemantics& doc,
                                               const WeightingConfig& cfg) {
    std::map<IndexUnit, double> out;
    for (const auto& u : doc.units) out[u.unit] = local_centrality(u, doc, cfg);
    return out;
}

CollectionStats collect_stats(const std::vector<DocSemantics>& docs,
                              const WeightingConfig& cfg) {
    CollectionStats stats;
    stats.doc_count = docs.size();

    double cc_sum = 0.0;
    std::size_t cc_count = 0;
    double doclen_sum = 0.0;
    for (const auto& doc : docs) {
        doclen_sum += doc.doclen();
        for (const auto& u : doc.units) {
            stats.df[u.unit] += 1;
            cc_sum += local_centrality(u, doc, cfg);
            ++cc_count;
        }
    }
    stats.avg_doclen = stats.doc_count ? doclen_sum / static_cast<double>(stats.doc_count) : 0.0;
    stats.mean_cc = cc_count ? cc_sum / static_cast<double>(cc_count) : 0.0;

    double threshold = centrality_threshold(stats, cfg);
    for (const auto& doc : docs) {
        for (const auto& u : doc.units) {
            if (is_central(local_centrality(u, doc, cfg), threshold))
                stats.central_count[u.unit] += 1;
        }
    }
    return stats;
}

}  // namespace semidx
