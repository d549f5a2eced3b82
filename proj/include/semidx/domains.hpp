#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semidx/lexdb.hpp"

namespace semidx {

inline constexpr std::string_view kFactotum = "factotum";
inline constexpr std::string_view kTopLevel = "top_level";

struct DomainNode {
    std::string name;
    std::optional<std::string> parent;  // none for top_level and factotum
    int depth = 0;                      // top_level is 1; 0 for factotum
    bool is_factotum = false;
};

/// Domain hierarchy plus synset -> domain annotations. Immutable after
/// load. Synsets absent from the mapping answer {factotum}.
class DomainDb {
  public:
    /// mapping lines:   <offset>-<pos_letter><TAB><domain> [<domain>...]
    /// hierarchy lines: child<TAB>parent   ("-" parent marks top_level/factotum)
    static DomainDb load(const std::filesystem::path& mapping_file,
                         const std::filesystem::path& hierarchy_file);

    /// Hierarchy only; annotations added later via the mapping loader.
    static DomainDb load_hierarchy(const std::filesystem::path& hierarchy_file);
    void load_mapping(const std::filesystem::path& mapping_file);

    const DomainNode& node(std::string_view name) const;  // throws UnknownDomainLabel
    bool has_domain(std::string_view name) const;

    /// factotum or one of its descendants: no tree position, no relatedness.
    bool is_generic(std::string_view name) const;

    int depth(std::string_view name) const;

    /// Deepest common ancestor in the tree; factotum is not comparable.
    std::string least_common_subsumer(std::string_view a, std::string_view b) const;

    /// Never empty: unmapped synsets are treated as {factotum}.
    const std::vector<std::string>& domains_of(SynsetId id) const;

    std::size_t domain_count() const { return nodes_.size(); }
    std::size_t annotation_count() const { return annotations_.size(); }
    const std::map<std::string, DomainNode>& nodes() const { return nodes_; }

  private:
    std::map<std::string, DomainNode> nodes_;
    std::unordered_map<SynsetId, std::vector<std::string>, SynsetIdHash> annotations_;
    std::vector<std::string> factotum_fallback_{std::string(kFactotum)};
};

}  // namespace semidx
