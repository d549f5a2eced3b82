#include "semidx/wsd.hpp"

#include <algorithm>

namespace semidx {

namespace {

// Candidate domains of a sense list in tie-break priority: first sense
// number the domain is attached to, then name. Factotum excluded.
std::vector<std::string> candidate_domains(const std::vector<SynsetId>& senses,
                                           const DomainDb& domains) {
    std::vector<std::string> ordered;
    for (const auto& sense : senses) {
        std::vector<std::string> at_this_sense;
        for (const auto& name : domains.domains_of(sense)) {
            if (domains.is_generic(name)) continue;
            if (std::find(ordered.begin(), ordered.end(), name) == ordered.end()
                && std::find(at_this_sense.begin(), at_this_sense.end(), name)
                       == at_this_sense.end())
                at_this_sense.push_back(name);
        }
        std::sort(at_this_sense.begin(), at_this_sense.end());
        ordered.insert(ordered.end(), at_this_sense.begin(), at_this_sense.end());
    }
    return ordered;
}

// Senses of the term that carry the chosen domain; all of them on factotum
// fallback. Sense order preserved.
std::vector<SynsetId> restricted_candidates(const std::vector<SynsetId>& senses,
                                            const std::string& domain, bool fallback,
                                            const DomainDb& domains) {
    if (fallback) return senses;
    std::vector<SynsetId> out;
    for (const auto& sense : senses) {
        const auto& labels = domains.domains_of(sense);
        if (std::find(labels.begin(), labels.end(), domain) != labels.end())
            out.push_back(sense);
    }
    return out;
}

// Context terms other than the target: document terms whose lemma appears
// in the global context.
std::vector<const TermInstance*> context_instances(const TermInstance& term,
                                                   const GlobalContext& ctx,
                                                   const DocTermMap& doc_terms) {
    std::vector<const TermInstance*> out;
    for (const auto& [key, inst] : doc_terms) {
        if (key.lemma == term.lemma && key.pos == term.pos) continue;
        if (ctx.terms.count(key.lemma)) out.push_back(inst);
    }
    return out;
}

}  // namespace

DocTermMap doc_term_map(const IdentifiedTerms& terms) {
    DocTermMap map;
    for (const auto& t : terms.expressions) map.emplace(key_of(t), &t);
    for (const auto& t : terms.simple) map.emplace(key_of(t), &t);
    return map;
}

std::pair<std::string, double> select_domain(const TermInstance& term,
                                             const GlobalContext& ctx, const LexicalDb& db,
                                             const DomainDb& domains,
                                             const DocTermMap& doc_terms) {
    auto senses = db.lookup_senses(term.lemma, term.pos).senses;
    if (senses.empty()) throw NoSenses(term.lemma);

    auto candidates = candidate_domains(senses, domains);
    if (candidates.empty()) return {std::string(kFactotum), 0.0};

    auto context = context_instances(term, ctx, doc_terms);
    std::string best;
    double best_score = -1.0;
    for (const auto& candidate : candidates) {
        double score = 0.0;
        for (const TermInstance* other : context) {
            auto other_senses = db.lookup_senses(other->lemma, other->pos).senses;
            for (const auto& other_domain : candidate_domains(other_senses, domains))
                score += wup_domain(candidate, other_domain, domains);
        }
        if (score > best_score) {  // strict: candidate order settles ties
            best = candidate;
            best_score = score;
        }
    }
    return {best, best_score};
}

std::pair<SynsetId, double> select_sense(
    const TermInstance& term, const std::string& chosen_domain, bool factotum_fallback,
    const GlobalContext& ctx, const LexicalDb& db, const DomainDb& domains,
    const InformationContentTable& ic,
    const std::map<TermKey, std::vector<SynsetId>>& restricted_senses) {
    auto senses = db.lookup_senses(term.lemma, term.pos).senses;
    if (senses.empty()) throw NoSenses(term.lemma);
    auto candidates = restricted_candidates(senses, chosen_domain, factotum_fallback, domains);
    if (candidates.empty()) candidates = senses;
    if (candidates.size() == 1) return {candidates.front(), 0.0};

    TermKey self = key_of(term);
    SynsetId best = candidates.front();
    double best_score = -1.0;
    for (const auto& candidate : candidates) {
        double score = 0.0;
        for (const auto& [key, other_senses] : restricted_senses) {
            if (key == self) continue;
            if (!ctx.terms.count(key.lemma)) continue;
            for (const auto& other : other_senses)
                score += resnik(candidate, other, db, ic);
        }
        if (score > best_score) {  // strict: sense order settles ties
            best = candidate;
            best_score = score;
        }
    }
    return {best, best_score};
}

DisambiguationResult disambiguate_document(const IdentifiedTerms& terms, const Contexts& ctx,
                                           const LexicalDb& db, const DomainDb& domains,
                                           const InformationContentTable& ic) {
    DisambiguationResult result;
    result.orphans = terms.orphans;

    DocTermMap doc_terms = doc_term_map(terms);

    // Level 2 for every term first; sense scoring then runs against the
    // frozen, domain-restricted candidate sets.
    struct Pending {
        const TermInstance* term;
        std::string domain;
        double domain_score = 0.0;
        bool fallback = false;
    };
    std::vector<Pending> pending;
    std::map<TermKey, std::vector<SynsetId>> restricted;

    for (const auto& [key, term] : doc_terms) {
        auto senses = db.lookup_senses(term->lemma, term->pos).senses;
        if (senses.empty()) {
            TermInstance demoted = *term;
            demoted.kind = TermKind::Orphan;
            result.orphans.push_back(std::move(demoted));
            continue;
        }
        Pending p{term, "", 0.0, false};
        if (term->kind == TermKind::Collocation && senses.size() == 1) {
            // Almost-unambiguous term: no scoring at all.
            p.domain = domains.domains_of(senses.front()).front();
            p.fallback = p.domain == kFactotum;
            restricted[key] = std::move(senses);
        } else {
            auto [domain, score] = select_domain(*term, ctx.global.at(key), db, domains,
                                                 doc_terms);
            p.domain = domain;
            p.domain_score = score;
            p.fallback = domain == kFactotum;
            restricted[key] = restricted_candidates(senses, domain, p.fallback, domains);
        }
        pending.push_back(std::move(p));
    }

    for (const auto& p : pending) {
        TermKey key = key_of(*p.term);
        ConceptAnnotation ann;
        ann.term = *p.term;
        ann.domain = p.domain;
        ann.domain_score = p.domain_score;
        ann.factotum_fallback = p.fallback;
        const auto& candidates = restricted.at(key);
        if (candidates.size() == 1) {
            ann.synset = candidates.front();
            ann.sense_score = 0.0;
        } else {
            auto [synset, score] = select_sense(*p.term, p.domain, p.fallback,
                                                ctx.global.at(key), db, domains, ic,
                                                restricted);
            ann.synset = synset;
            ann.sense_score = score;
        }
        result.concepts.push_back(std::move(ann));
    }

    std::sort(result.orphans.begin(), result.orphans.end(),
              [](const TermInstance& a, const TermInstance& b) {
                  return std::tie(a.lemma, a.pos) < std::tie(b.lemma, b.pos);
              });
    return result;
}

}  // namespace semidx
