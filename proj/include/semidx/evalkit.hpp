#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semidx/errors.hpp"

namespace semidx {

/// TREC relevance judgments. Non-relevant (0) judgments are retained for
/// pooled qrels.
struct Qrels {
    std::map<std::string, std::map<std::string, int>> judgments;  // qid -> doc -> rel

    bool relevant(const std::string& qid, const std::string& doc_id) const;
    std::size_t num_relevant(const std::string& qid) const;
};

/// `qid 0 docid rel`, whitespace-separated.
Qrels parse_qrels(const std::filesystem::path& path);

struct RunEntry {
    std::string doc_id;
    double score = 0.0;
    int rank = 0;
};

/// Ranked output of one system over a query set. Ranks are 1..len
/// contiguous per query and scores non-increasing.
struct RunList {
    std::string tag;
    std::map<std::string, std::vector<RunEntry>> by_query;

    void add(const std::string& qid, const std::vector<std::pair<std::string, double>>& ranked);
};

/// `qid Q0 docid rank score tag`, the format trec_eval consumes.
RunList parse_run(const std::filesystem::path& path);
void write_run(const RunList& run, const std::filesystem::path& path);

/// RR_x / x. Runs shorter than x keep denominator x.
double precision_at(const std::vector<RunEntry>& run, const Qrels& qrels,
                    const std::string& qid, int x);

/// (1/Q_j) * sum of precisions at the ranks of retrieved relevant docs;
/// unretrieved relevant docs contribute 0.
double average_precision(const std::vector<RunEntry>& run, const Qrels& qrels,
                         const std::string& qid);

inline const std::vector<int> kDefaultCutoffs = {1, 2, 3, 4, 5, 10, 15, 20, 30, 50, 100};

/// Per-metric means over the evaluated queries: "P@x" rows, their mean
/// "MP@x", and "MAP". Queries without relevant judgments are excluded;
/// queries missing from the qrels are reported in warnings and skipped.
struct EvalReport {
    std::map<std::string, double> metrics;
    std::vector<std::string> metric_order;
    std::size_t queries_evaluated = 0;
    std::vector<std::string> warnings;
};

EvalReport evaluate(const RunList& run, const Qrels& qrels,
                    const std::vector<int>& cutoffs = kDefaultCutoffs);

struct ImprovementRow {
    std::string metric;
    double run_a = 0.0;
    double run_b = 0.0;
    std::optional<double> delta_pct;  // empty when the baseline is 0
    bool significant = false;         // |delta| > 25%
};

/// 100 * (a - b) / b per metric, flagged significant beyond 25%.
std::vector<ImprovementRow> improvement_report(const EvalReport& a, const EvalReport& b);

/// Aligned table plus machine-readable `metric<TAB>a<TAB>b<TAB>delta_pct`
/// lines.
void print_improvement(const std::vector<ImprovementRow>& rows, const std::string& tag_a,
                       const std::string& tag_b, std::ostream& out, bool machine = false);

}  // namespace semidx
