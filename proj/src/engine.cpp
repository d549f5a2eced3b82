#include "semidx/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace semidx {

std::string_view representation_name(Representation r) {
    return r == Representation::Semantic ? "semantic" : "classic";
}

namespace {

void chomp(std::string& line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return std::move(out).str();
}

Corpus ingest_time(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus " + path.string());
    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::string> current_id;
    std::string current_text;
    bool stopped = false;
    auto flush = [&]() {
        if (current_id) corpus.docs.emplace_back(std::move(*current_id), std::move(current_text));
        current_id.reset();
        current_text.clear();
    };
    while (std::getline(in, line)) {
        ++line_no;
        chomp(line);
        if (line.rfind("*TEXT", 0) == 0) {
            if (stopped) throw MalformedRecord(line_no);
            flush();
            std::istringstream header(line.substr(5));
            std::string id;
            header >> id;
            if (id.empty()) throw MalformedRecord(line_no);
            current_id = id;
        } else if (line.rfind("*STOP", 0) == 0) {
            flush();
            stopped = true;
        } else if (current_id) {
            current_text += line;
            current_text += '\n';
        } else if (!stopped && !line.empty()
                   && line.find_first_not_of(" \t") != std::string::npos) {
            throw MalformedRecord(line_no);
        }
    }
    if (!stopped) {
        if (current_id) throw MalformedRecord(line_no);  // *TEXT without *STOP
        if (corpus.docs.empty()) throw EmptyCorpus(path.string());
    }
    if (corpus.docs.empty()) throw EmptyCorpus(path.string());
    return corpus;
}

Corpus ingest_dir(const std::filesystem::path& path) {
    if (!std::filesystem::is_directory(path)) throw Error(path.string() + " is not a directory");
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    Corpus corpus;
    for (const auto& file : files)
        corpus.docs.emplace_back(file.filename().string(), read_file(file));
    if (corpus.docs.empty()) throw EmptyCorpus(path.string());
    return corpus;
}

}  // namespace

Corpus ingest_corpus(const std::filesystem::path& path, CorpusFormat format) {
    return format == CorpusFormat::TimeMagazine ? ingest_time(path) : ingest_dir(path);
}

std::vector<std::pair<std::string, std::string>> load_queries(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open queries " + path.string());
    std::vector<std::pair<std::string, std::string>> queries;
    std::string line;
    bool time_format = false;
    bool format_known = false;
    std::optional<std::string> current_id;
    std::string current_text;
    auto flush = [&]() {
        if (current_id) queries.emplace_back(std::move(*current_id), std::move(current_text));
        current_id.reset();
        current_text.clear();
    };
    while (std::getline(in, line)) {
        chomp(line);
        if (!format_known) {
            if (line.empty()) continue;
            time_format = line.rfind("*FIND", 0) == 0;
            format_known = true;
        }
        if (time_format) {
            if (line.rfind("*FIND", 0) == 0) {
                flush();
                std::istringstream header(line.substr(5));
                std::string id;
                header >> id;
                current_id = id;
            } else if (line.rfind("*STOP", 0) == 0) {
                flush();
            } else if (current_id) {
                current_text += line;
                current_text += '\n';
            }
        } else {
            if (line.empty() || line[0] == '#') continue;
            auto split = line.find_first_of(" \t");
            if (split == std::string::npos) continue;
            auto text_start = line.find_first_not_of(" \t", split);
            if (text_start == std::string::npos) continue;
            queries.emplace_back(line.substr(0, split), line.substr(text_start));
        }
    }
    flush();
    return queries;
}

DocAnalysis analyze_document(const Pipeline& pipe, std::string doc_id, std::string_view text,
                             Representation representation) {
    DocAnalysis analysis;
    analysis.doc_id = std::move(doc_id);
    auto tagged = prepare_text(text, *pipe.stopwords, *pipe.tagger);

    if (representation == Representation::Classic) {
        // Keyword index: lemmatized non-stopword tokens.
        for (const auto& tt : tagged) {
            if (tt.token.is_stopword) continue;
            std::string lemma = tt.token.norm;
            if (tt.pos) {
                auto bases = pipe.db->morphy(tt.token.norm, *tt.pos);
                if (!bases.empty()) lemma = bases.front();
            }
            analysis.raw_tf[IndexUnit::orphan(std::move(lemma))] += 1.0;
        }
        return analysis;
    }

    analysis.terms = identify_terms(tagged, *pipe.collocations, *pipe.db);
    auto contexts = build_contexts(analysis.terms);
    analysis.disamb =
        disambiguate_document(analysis.terms, contexts, *pipe.db, *pipe.domains, *pipe.ic);

    for (const auto& ann : analysis.disamb.concepts)
        analysis.raw_tf[IndexUnit::of(ann.synset)] +=
            static_cast<double>(ann.term.occurrences.size());
    for (const auto& orphan : analysis.disamb.orphans)
        analysis.raw_tf[IndexUnit::orphan(orphan.lemma)] +=
            static_cast<double>(orphan.occurrences.size());
    return analysis;
}

std::vector<DocSemantics> corpus_semantics(const Pipeline& pipe, const Corpus& corpus,
                                           const WeightingConfig& cfg,
                                           Representation representation) {
    std::vector<DocSemantics> docs;
    docs.reserve(corpus.docs.size());
    for (const auto& [doc_id, text] : corpus.docs) {
        auto analysis = analyze_document(pipe, doc_id, text, representation);
        docs.push_back(compute_semantics(analysis.doc_id, analysis.raw_tf, *pipe.db,
                                         *pipe.ic, cfg));
    }
    return docs;
}

Index assemble_index(const std::vector<DocSemantics>& docs, Representation representation,
                     const WeightingConfig& cfg, std::string config_text) {
    Index index;
    index.representation = representation;
    index.weighting = cfg;
    index.config_text = std::move(config_text);
    index.stats = collect_stats(docs, cfg);

    for (const auto& doc : docs) {
        DocumentVector vec;
        vec.doc_id = doc.doc_id;
        double sum_sq = 0.0;
        for (const auto& u : doc.units) {
            double w = 0.0;
            if (cfg.scheme == Scheme::CcIdc) {
                w = ccidc_weight(local_centrality(u, doc, cfg), u.unit, index.stats);
            } else {
                w = baseline_weight(u.unit, u.raw_tf, doc.doclen(), index.stats, cfg);
            }
            if (w > 0.0) {
                vec.weights.emplace(u.unit, w);
                sum_sq += w * w;
            }
        }
        vec.norm = std::sqrt(sum_sq);
        index.doc_ids.push_back(doc.doc_id);
        for (const auto& [unit, w] : vec.weights)
            index.postings[unit].emplace_back(doc.doc_id, w);
        index.vectors.emplace(doc.doc_id, std::move(vec));
    }
    return index;
}

Index build_index(const Pipeline& pipe, const Corpus& corpus, const WeightingConfig& cfg,
                  Representation representation, std::string config_text) {
    if (corpus.docs.empty()) throw EmptyCorpus("(in-memory corpus)");
    auto docs = corpus_semantics(pipe, corpus, cfg, representation);
    return assemble_index(docs, representation, cfg, std::move(config_text));
}

std::map<IndexUnit, double> query_vector(const Index& index, const Pipeline& pipe,
                                         std::string_view query_text) {
    auto analysis = analyze_document(pipe, "query", query_text, index.representation);
    auto sem = compute_semantics(analysis.doc_id, analysis.raw_tf, *pipe.db, *pipe.ic,
                                 index.weighting);
    std::map<IndexUnit, double> weights;
    for (const auto& u : sem.units) {
        double w = 0.0;
        if (index.weighting.scheme == Scheme::CcIdc) {
            w = ccidc_weight(local_centrality(u, sem, index.weighting), u.unit, index.stats);
        } else {
            w = baseline_weight(u.unit, u.raw_tf, sem.doclen(), index.stats, index.weighting);
        }
        if (w > 0.0) weights.emplace(u.unit, w);
    }
    return weights;
}

SearchResult search(const Index& index, const Pipeline& pipe, std::string_view query_text,
                    std::size_t k) {
    SearchResult result;
    auto weights = query_vector(index, pipe, query_text);
    if (weights.empty()) {
        result.empty_query = true;
        return result;
    }
    double query_norm = 0.0;
    for (const auto& [unit, w] : weights) query_norm += w * w;
    query_norm = std::sqrt(query_norm);

    // Term-at-a-time over the postings of the query's units.
    std::map<std::string, double> dot;
    for (const auto& [unit, qw] : weights) {
        auto it = index.postings.find(unit);
        if (it == index.postings.end()) continue;
        for (const auto& [doc_id, dw] : it->second) dot[doc_id] += qw * dw;
    }
    for (const auto& [doc_id, numerator] : dot) {
        if (numerator <= 0.0) continue;
        const auto& vec = index.vectors.at(doc_id);
        if (vec.norm <= 0.0) continue;
        result.ranked.emplace_back(doc_id, numerator / (query_norm * vec.norm));
    }
    std::sort(result.ranked.begin(), result.ranked.end(),
              [](const auto& a, const auto& b) {
                  if (a.second != b.second) return a.second > b.second;
                  return a.first < b.first;
              });
    if (result.ranked.size() > k) result.ranked.resize(k);
    return result;
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
    std::uint64_t hash = seed;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path, std::uint64_t seed) {
    return fnv1a64(read_file(path), seed);
}

}  // namespace semidx
