#pragma once

#include <iosfwd>
#include <string_view>
#include <unordered_map>

#include "semidx/domains.hpp"
#include "semidx/lexdb.hpp"

namespace semidx {

/// Smoothed, descendant-inclusive information content per synset.
/// ic is monotone non-increasing from child to parent; ic_max is the IC of
/// the rarest observed synset and is what resnik_norm divides by.
struct InformationContentTable {
    std::unordered_map<SynsetId, double, SynsetIdHash> ic;
    double ic_max = 0.0;

    double of(SynsetId id) const {
        auto it = ic.find(id);
        return it == ic.end() ? 0.0 : it->second;
    }
};

/// Wu-Palmer over the domain tree: 2*depth(lcs) / (depth(a) + depth(b)).
/// Factotum is not comparable; callers filter it out beforehand.
double wup_domain(std::string_view a, std::string_view b, const DomainDb& db);

/// count(S) = tagged_count + 1 summed over S and its hyponym descendants;
/// P(S) = count(S) / total of its POS; ic = -ln P. Nouns and verbs only.
InformationContentTable build_ic(const LexicalDb& db);

/// ic(LCS(a, b)); 0 across POS, for hierarchy-less POS, and when no common
/// subsumer exists.
double resnik(SynsetId a, SynsetId b, const LexicalDb& db,
              const InformationContentTable& ic);

/// resnik / ic_max, in [0, 1].
double resnik_norm(SynsetId a, SynsetId b, const LexicalDb& db,
                   const InformationContentTable& ic);

/// Debug dump, one `offset-pos<TAB>ic` line per synset, sorted by id.
void dump_ic(const InformationContentTable& table, std::ostream& out);

}  // namespace semidx
