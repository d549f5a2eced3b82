#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semidx/conceptid.hpp"
#include "semidx/domains.hpp"
#include "semidx/similarity.hpp"

namespace semidx {

struct ConceptAnnotation {
    TermInstance term;
    std::string domain;
    SynsetId synset;
    double domain_score = 0.0;
    double sense_score = 0.0;
    bool factotum_fallback = false;  // every candidate domain was factotum
};

struct DisambiguationResult {
    std::vector<ConceptAnnotation> concepts;  // sorted by (lemma, pos)
    std::vector<TermInstance> orphans;        // passthrough plus demotions
};

/// Index terms of the document the disambiguator can resolve context
/// lemmas against: every simple word and collocation, keyed by (lemma, pos).
using DocTermMap = std::map<TermKey, const TermInstance*>;

DocTermMap doc_term_map(const IdentifiedTerms& terms);

/// Level 2: pick the domain whose Wu-Palmer relatedness to the context
/// terms' candidate domains is maximal. Ties break toward the domain
/// attached to the lowest-numbered sense, then lexicographically. Returns
/// (factotum, 0) when every candidate is factotum.
std::pair<std::string, double> select_domain(const TermInstance& term,
                                             const GlobalContext& ctx, const LexicalDb& db,
                                             const DomainDb& domains,
                                             const DocTermMap& doc_terms);

/// Level 3: among the term's senses carrying chosen_domain (all senses on
/// factotum fallback), pick the one with maximal summed Resnik relatedness
/// to the context terms' domain-restricted sense sets. Ties break toward
/// the lowest sense number.
std::pair<SynsetId, double> select_sense(
    const TermInstance& term, const std::string& chosen_domain, bool factotum_fallback,
    const GlobalContext& ctx, const LexicalDb& db, const DomainDb& domains,
    const InformationContentTable& ic,
    const std::map<TermKey, std::vector<SynsetId>>& restricted_senses);

/// Runs levels 2 and 3 over every simple word and collocation; single-sense
/// collocations skip both levels; terms without senses demote to orphans.
DisambiguationResult disambiguate_document(const IdentifiedTerms& terms, const Contexts& ctx,
                                           const LexicalDb& db, const DomainDb& domains,
                                           const InformationContentTable& ic);

}  // namespace semidx
