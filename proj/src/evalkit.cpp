#include "semidx/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace semidx {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string field;
    while (in >> field) out.push_back(field);
    return out;
}

}  // namespace

bool Qrels::relevant(const std::string& qid, const std::string& doc_id) const {
    auto q = judgments.find(qid);
    if (q == judgments.end()) return false;
    auto d = q->second.find(doc_id);
    return d != q->second.end() && d->second > 0;
}

std::size_t Qrels::num_relevant(const std::string& qid) const {
    auto q = judgments.find(qid);
    if (q == judgments.end()) return 0;
    std::size_t n = 0;
    for (const auto& [doc, rel] : q->second)
        if (rel > 0) ++n;
    return n;
}

Qrels parse_qrels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open qrels " + path.string());
    Qrels qrels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() != 4) throw MalformedQrelLine(line_no);
        int rel = 0;
        try {
            rel = std::stoi(fields[3]);
        } catch (const std::exception&) {
            throw MalformedQrelLine(line_no);
        }
        qrels.judgments[fields[0]][fields[2]] = rel;
    }
    return qrels;
}

void RunList::add(const std::string& qid,
                  const std::vector<std::pair<std::string, double>>& ranked) {
    auto& entries = by_query[qid];
    for (const auto& [doc_id, score] : ranked)
        entries.push_back({doc_id, score, static_cast<int>(entries.size()) + 1});
}

RunList parse_run(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open run " + path.string());
    RunList run;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_ws(line);
        if (fields.empty()) continue;
        if (fields.size() != 6)
            throw MalformedLine(path.string(), line_no, "expected qid Q0 docid rank score tag");
        RunEntry entry;
        entry.doc_id = fields[2];
        try {
            entry.rank = std::stoi(fields[3]);
            entry.score = std::stod(fields[4]);
        } catch (const std::exception&) {
            throw MalformedLine(path.string(), line_no, "bad rank or score");
        }
        run.by_query[fields[0]].push_back(std::move(entry));
        run.tag = fields[5];
    }
    for (auto& [qid, entries] : run.by_query) {
        std::sort(entries.begin(), entries.end(),
                  [](const RunEntry& a, const RunEntry& b) { return a.rank < b.rank; });
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].rank != static_cast<int>(i) + 1) throw NonContiguousRanks(qid);
            if (i > 0 && entries[i].score > entries[i - 1].score)
                throw MalformedLine(path.string(), 0, "scores increase within query " + qid);
        }
    }
    return run;
}

void write_run(const RunList& run, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw Error("cannot write run " + path.string());
    out << std::setprecision(6) << std::fixed;
    for (const auto& [qid, entries] : run.by_query)
        for (const auto& entry : entries)
            out << qid << " Q0 " << entry.doc_id << ' ' << entry.rank << ' ' << entry.score
                << ' ' << (run.tag.empty() ? "semidx" : run.tag) << '\n';
}

double precision_at(const std::vector<RunEntry>& run, const Qrels& qrels,
                    const std::string& qid, int x) {
    if (x < 1) throw Error("precision cutoff must be >= 1");
    int relevant = 0;
    for (std::size_t i = 0; i < run.size() && i < static_cast<std::size_t>(x); ++i)
        if (qrels.relevant(qid, run[i].doc_id)) ++relevant;
    return static_cast<double>(relevant) / static_cast<double>(x);
}

double average_precision(const std::vector<RunEntry>& run, const Qrels& qrels,
                         const std::string& qid) {
    std::size_t total_relevant = qrels.num_relevant(qid);
    if (total_relevant == 0) throw NoRelevantDocs(qid);
    double sum = 0.0;
    int seen_relevant = 0;
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (!qrels.relevant(qid, run[i].doc_id)) continue;
        ++seen_relevant;
        sum += static_cast<double>(seen_relevant) / static_cast<double>(i + 1);
    }
    return sum / static_cast<double>(total_relevant);
}

EvalReport evaluate(const RunList& run, const Qrels& qrels, const std::vector<int>& cutoffs) {
    EvalReport report;
    std::vector<const std::string*> evaluated;
    for (const auto& [qid, entries] : run.by_query) {
        if (!qrels.judgments.count(qid)) {
            report.warnings.push_back("query " + qid + " missing from qrels; skipped");
            continue;
        }
        if (qrels.num_relevant(qid) == 0) {
            report.warnings.push_back("query " + qid + " has no relevant docs; excluded");
            continue;
        }
        evaluated.push_back(&qid);
    }
    report.queries_evaluated = evaluated.size();
    if (evaluated.empty()) return report;

    double n = static_cast<double>(evaluated.size());
    double mp_sum = 0.0;
    for (int x : cutoffs) {
        double sum = 0.0;
        for (const auto* qid : evaluated)
            sum += precision_at(run.by_query.at(*qid), qrels, *qid, x);
        std::string name = "P@" + std::to_string(x);
        report.metrics[name] = sum / n;
        report.metric_order.push_back(name);
        mp_sum += sum / n;
    }
    report.metrics["MP@x"] = cutoffs.empty() ? 0.0 : mp_sum / static_cast<double>(cutoffs.size());
    report.metric_order.push_back("MP@x");

    double ap_sum = 0.0;
    for (const auto* qid : evaluated)
        ap_sum += average_precision(run.by_query.at(*qid), qrels, *qid);
    report.metrics["MAP"] = ap_sum / n;
    report.metric_order.push_back("MAP");
    return report;
}

std::vector<ImprovementRow> improvement_report(const EvalReport& a, const EvalReport& b) {
    std::vector<ImprovementRow> rows;
    for (const auto& metric : a.metric_order) {
        auto in_b = b.metrics.find(metric);
        if (in_b == b.metrics.end()) continue;
        ImprovementRow row;
        row.metric = metric;
        row.run_a = a.metrics.at(metric);
        row.run_b = in_b->second;
        if (row.run_b != 0.0) {
            row.delta_pct = 100.0 * (row.run_a - row.run_b) / row.run_b;
            row.significant = std::abs(*row.delta_pct) > 25.0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_improvement(const std::vector<ImprovementRow>& rows, const std::string& tag_a,
                       const std::string& tag_b, std::ostream& out, bool machine) {
    if (machine) {
        for (const auto& row : rows) {
            out << row.metric << '\t' << row.run_a << '\t' << row.run_b << '\t';
            if (row.delta_pct) out << *row.delta_pct;
            else out << "undefined";
            out << '\n';
        }
        return;
    }
    out << std::left << std::setw(8) << "metric" << std::right << std::setw(12) << tag_a
        << std::setw(12) << tag_b << std::setw(12) << "delta%" << '\n';
    for (const auto& row : rows) {
        out << std::left << std::setw(8) << row.metric << std::right << std::fixed
            << std::setprecision(4) << std::setw(12) << row.run_a << std::setw(12)
            << row.run_b;
        if (row.delta_pct)
            out << std::setprecision(2) << std::setw(11) << *row.delta_pct
                << (row.significant ? "*" : " ");
        else
            out << std::setw(11) << "undefined" << ' ';
        out << '\n';
    }
    out << "(* = |delta| > 25%)\n";
}

}  // namespace semidx
