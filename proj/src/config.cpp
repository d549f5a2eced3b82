#include "semidx/config.hpp"

#include <fstream>
#include <sstream>

namespace semidx {

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<int> parse_cutoffs(const std::string& value) {
    std::vector<int> out;
    std::istringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            int x = std::stoi(item);
            if (x < 1) throw ConfigError("cutoff must be >= 1: " + item);
            out.push_back(x);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad cutoff: " + item);
        }
    }
    if (out.empty()) throw ConfigError("empty cutoff list");
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw ConfigError(key + ": bad number " + value);
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError(key + ": bad number " + value);
    }
}

}  // namespace

EngineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path.string());
    EngineConfig cfg;
    auto base = path.parent_path();
    auto resolve = [&](const std::string& value) -> std::filesystem::path {
        std::filesystem::path p(value);
        return p.is_absolute() ? p : base / p;
    };

    std::ostringstream snapshot;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        snapshot << line << '\n';
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        auto stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path.string() + ":" + std::to_string(line_no)
                              + ": expected key = value");
        std::string key = trim(stripped.substr(0, eq));
        std::string value = trim(stripped.substr(eq + 1));

        if (key == "wordnet_dir") cfg.wordnet_dir = resolve(value);
        else if (key == "domains_map") cfg.domains_map = resolve(value);
        else if (key == "domains_hierarchy") cfg.domains_hierarchy = resolve(value);
        else if (key == "stopwords") cfg.stopwords = resolve(value);
        else if (key == "corpus") cfg.corpus = resolve(value);
        else if (key == "index_out") cfg.index_out = resolve(value);
        else if (key == "corpus_format") {
            if (value == "time") cfg.corpus_format = CorpusFormat::TimeMagazine;
            else if (value == "dir") cfg.corpus_format = CorpusFormat::DirOfText;
            else throw ConfigError("corpus_format must be time or dir, got " + value);
        } else if (key == "representation") {
            if (value == "semantic") cfg.representation = Representation::Semantic;
            else if (value == "classic") cfg.representation = Representation::Classic;
            else throw ConfigError("representation must be semantic or classic, got " + value);
        } else if (key == "scheme") {
            auto scheme = scheme_from_name(value);
            if (!scheme) throw ConfigError("unknown scheme " + value);
            cfg.weighting.scheme = *scheme;
        } else if (key == "alpha") {
            cfg.weighting.alpha = parse_double(key, value);
        } else if (key == "centrality_threshold") {
            if (value == "mean") cfg.weighting.absolute_threshold.reset();
            else cfg.weighting.absolute_threshold = parse_double(key, value);
        } else if (key == "bm25_k1") {
            cfg.weighting.bm25_k1 = parse_double(key, value);
        } else if (key == "bm25_b") {
            cfg.weighting.bm25_b = parse_double(key, value);
        } else if (key == "tf_normalization") {
            if (value == "max") cfg.weighting.raw_tf = false;
            else if (value == "raw") cfg.weighting.raw_tf = true;
            else throw ConfigError("tf_normalization must be max or raw");
        } else if (key == "sim_normalization") {
            if (value == "mean") cfg.weighting.raw_sim = false;
            else if (value == "raw") cfg.weighting.raw_sim = true;
            else throw ConfigError("sim_normalization must be mean or raw");
        } else if (key == "cutoffs") {
            cfg.cutoffs = parse_cutoffs(value);
        } else if (key == "tagger") {
            if (value != "builtin" && value != "external")
                throw ConfigError("tagger must be builtin or external");
            cfg.tagger = value;
        } else if (key == "external_tags_dir") {
            cfg.external_tags_dir = resolve(value);
        } else {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": unknown key "
                              + key);
        }
    }
    cfg.raw_text = std::move(snapshot).str();
    return cfg;
}

void EngineConfig::validate(bool need_corpus) const {
    auto require = [](const std::filesystem::path& p, const char* what) {
        if (p.empty()) throw ConfigError(std::string(what) + " not set");
        if (!std::filesystem::exists(p))
            throw ConfigError(std::string(what) + " not found: " + p.string());
    };
    require(wordnet_dir, "wordnet_dir");
    require(domains_map, "domains_map");
    require(domains_hierarchy, "domains_hierarchy");
    require(stopwords, "stopwords");
    if (need_corpus) require(corpus, "corpus");
    if (weighting.alpha < 0.0 || weighting.alpha > 1.0)
        throw ConfigError("alpha must be in [0, 1]");
    if (weighting.absolute_threshold && *weighting.absolute_threshold < 0.0)
        throw ConfigError("centrality_threshold must be >= 0");
    if (tagger == "external") require(external_tags_dir, "external_tags_dir");
}

}  // namespace semidx
