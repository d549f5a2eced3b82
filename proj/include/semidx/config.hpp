#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "semidx/engine.hpp"

namespace semidx {

/// Engine configuration, parsed from a `key = value` text file with '#'
/// comments. Relative paths resolve against the config file's directory.
struct EngineConfig {
    std::filesystem::path wordnet_dir;
    std::filesystem::path domains_map;
    std::filesystem::path domains_hierarchy;
    std::filesystem::path stopwords;
    std::filesystem::path corpus;
    std::filesystem::path index_out;
    CorpusFormat corpus_format = CorpusFormat::TimeMagazine;
    Representation representation = Representation::Semantic;
    WeightingConfig weighting;
    std::vector<int> cutoffs = kDefaultCutoffsVector();
    std::string tagger = "builtin";  // builtin | external
    std::filesystem::path external_tags_dir;
    std::string raw_text;  // snapshot of the file as read

    static std::vector<int> kDefaultCutoffsVector() {
        return {1, 2, 3, 4, 5, 10, 15, 20, 30, 50, 100};
    }

    /// Throws ConfigError when a referenced path is missing or a value is
    /// out of range.
    void validate(bool need_corpus) const;
};

EngineConfig load_config(const std::filesystem::path& path);

}  // namespace semidx
