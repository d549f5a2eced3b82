#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "semidx/wsd.hpp"
#include "testutil.hpp"

using namespace semidx;

namespace {

const LexicalDb& minilex() {
    static LexicalDb db = LexicalDb::load(WordNetPaths::from_dir(testutil::minilex_dir()));
    return db;
}

const DomainDb& domains() {
    static DomainDb db =
        DomainDb::load(testutil::minidomains_mapping(), testutil::domain_hierarchy());
    return db;
}

const InformationContentTable& ic() {
    static InformationContentTable table = build_ic(minilex());
    return table;
}

const StopwordList& stopwords() {
    static StopwordList list = StopwordList::load(testutil::stopwords_path());
    return list;
}

const CollocationLexicon& lexicon() {
    static CollocationLexicon lex = CollocationLexicon::build(minilex());
    return lex;
}

struct Analyzed {
    IdentifiedTerms terms;
    Contexts ctx;
};

Analyzed analyze(const std::string& text) {
    Analyzed out;
    out.terms = identify_terms(prepare_text(text, stopwords(), LexiconTagger(minilex())),
                               lexicon(), minilex());
    out.ctx = build_contexts(out.terms);
    return out;
}

const TermInstance* find_term(const IdentifiedTerms& terms, const std::string& lemma,
                              Pos pos) {
    return terms.find({lemma, pos});
}

// ---------------------------------------------------------------------------
// Exhaustive oracle. Tree walks, Wu-Palmer, Resnik and both argmaxes are
// recomputed from the definitions, with an optional positive scaling applied
// to every pairwise similarity.
// ---------------------------------------------------------------------------

int oracle_domain_depth(const std::string& name, const DomainDb& db) {
    int depth = 1;
    const DomainNode* node = &db.node(name);
    while (node->parent) {
        node = &db.node(*node->parent);
        ++depth;
    }
    return depth;
}

std::vector<std::string> oracle_domain_chain(const std::string& name, const DomainDb& db) {
    std::vector<std::string> chain{name};
    const DomainNode* node = &db.node(name);
    while (node->parent) {
        chain.push_back(*node->parent);
        node = &db.node(*node->parent);
    }
    return chain;
}

double oracle_wup(const std::string& a, const std::string& b, const DomainDb& db) {
    auto chain_a = oracle_domain_chain(a, db);
    auto chain_b = oracle_domain_chain(b, db);
    std::string lcs;
    int lcs_depth = -1;
    for (const auto& node : chain_a) {
        if (std::find(chain_b.begin(), chain_b.end(), node) == chain_b.end()) continue;
        int d = oracle_domain_depth(node, db);
        if (d > lcs_depth) {
            lcs = node;
            lcs_depth = d;
        }
    }
    return 2.0 * lcs_depth / (oracle_domain_depth(a, db) + oracle_domain_depth(b, db));
}

std::set<SynsetId> oracle_ancestors(SynsetId id, const LexicalDb& db) {
    std::set<SynsetId> out{id};
    for (const auto& parent : db.synset(id).hypernyms) {
        auto up = oracle_ancestors(parent, db);
        out.insert(up.begin(), up.end());
    }
    return out;
}

int oracle_max_depth(SynsetId id, const LexicalDb& db) {
    int best = 1;
    for (const auto& parent : db.synset(id).hypernyms)
        best = std::max(best, oracle_max_depth(parent, db) + 1);
    return best;
}

int oracle_min_depth(SynsetId id, const LexicalDb& db) {
    const auto& parents = db.synset(id).hypernyms;
    if (parents.empty()) return 1;
    int best = 0;
    for (const auto& parent : parents) {
        int d = oracle_min_depth(parent, db) + 1;
        if (best == 0 || d < best) best = d;
    }
    return best;
}

double oracle_resnik(SynsetId a, SynsetId b, const LexicalDb& db,
                     const InformationContentTable& table) {
    if (a.pos != b.pos || !pos_has_hierarchy(a.pos)) return 0.0;
    auto in_a = oracle_ancestors(a, db);
    auto in_b = oracle_ancestors(b, db);
    std::optional<SynsetId> best;
    auto rank = [&](SynsetId id) {
        return std::make_tuple(oracle_max_depth(id, db), oracle_min_depth(id, db));
    };
    for (const auto& id : in_a) {
        if (!in_b.count(id)) continue;
        if (!best || rank(id) > rank(*best) || (rank(id) == rank(*best) && id < *best))
            best = id;
    }
    return best ? table.of(*best) : 0.0;
}

std::vector<std::string> oracle_candidate_domains(const std::vector<SynsetId>& senses,
                                                  const DomainDb& db) {
    std::vector<std::string> ordered;
    for (const auto& sense : senses) {
        std::vector<std::string> here;
        for (const auto& name : db.domains_of(sense)) {
            if (db.is_generic(name)) continue;
            if (std::find(ordered.begin(), ordered.end(), name) == ordered.end()
                && std::find(here.begin(), here.end(), name) == here.end())
                here.push_back(name);
        }
        std::sort(here.begin(), here.end());
        ordered.insert(ordered.end(), here.begin(), here.end());
    }
    return ordered;
}

std::pair<std::string, double> oracle_select_domain(const TermInstance& term,
                                                    const GlobalContext& ctx,
                                                    const DocTermMap& doc_terms,
                                                    double scale) {
    auto senses = minilex().lookup_senses(term.lemma, term.pos).senses;
    auto candidates = oracle_candidate_domains(senses, domains());
    if (candidates.empty()) return {"factotum", 0.0};
    std::string best;
    double best_score = -1.0;
    for (const auto& candidate : candidates) {
        double score = 0.0;
        for (const auto& [key, inst] : doc_terms) {
            if (key.lemma == term.lemma && key.pos == term.pos) continue;
            if (!ctx.terms.count(key.lemma)) continue;
            auto other = minilex().lookup_senses(inst->lemma, inst->pos).senses;
            for (const auto& d : oracle_candidate_domains(other, domains()))
                score += scale * oracle_wup(candidate, d, domains());
        }
        if (score > best_score) {
            best = candidate;
            best_score = score;
        }
    }
    return {best, best_score};
}

std::pair<SynsetId, double> oracle_select_sense(
    const TermInstance& term, const std::string& domain, bool fallback,
    const GlobalContext& ctx, const std::map<TermKey, std::vector<SynsetId>>& restricted,
    double scale) {
    auto senses = minilex().lookup_senses(term.lemma, term.pos).senses;
    std::vector<SynsetId> candidates;
    for (const auto& sense : senses) {
        const auto& labels = domains().domains_of(sense);
        if (fallback || std::find(labels.begin(), labels.end(), domain) != labels.end())
            candidates.push_back(sense);
    }
    if (candidates.empty()) candidates = senses;
    SynsetId best = candidates.front();
    double best_score = -1.0;
    for (const auto& candidate : candidates) {
        double score = 0.0;
        for (const auto& [key, other_senses] : restricted) {
            if (key.lemma == term.lemma && key.pos == term.pos) continue;
            if (!ctx.terms.count(key.lemma)) continue;
            for (const auto& other : other_senses)
                score += scale * oracle_resnik(candidate, other, minilex(), ic());
        }
        if (score > best_score) {
            best = candidate;
            best_score = score;
        }
    }
    return {best, best_score};
}

// Frozen domain-restricted candidate sets after level 2, oracle style.
std::map<TermKey, std::vector<SynsetId>> oracle_restricted(const Analyzed& doc,
                                                           const DocTermMap& doc_terms) {
    std::map<TermKey, std::vector<SynsetId>> out;
    for (const auto& [key, inst] : doc_terms) {
        auto senses = minilex().lookup_senses(inst->lemma, inst->pos).senses;
        if (senses.empty()) continue;
        std::string domain;
        bool fallback = false;
        if (inst->kind == TermKind::Collocation && senses.size() == 1) {
            domain = domains().domains_of(senses.front()).front();
            fallback = domain == "factotum";
        } else {
            auto [d, score] = oracle_select_domain(*inst, doc.ctx.global.at(key), doc_terms,
                                                   1.0);
            domain = d;
            fallback = domain == "factotum";
        }
        std::vector<SynsetId> candidates;
        for (const auto& sense : senses) {
            const auto& labels = domains().domains_of(sense);
            if (fallback || std::find(labels.begin(), labels.end(), domain) != labels.end())
                candidates.push_back(sense);
        }
        out[key] = candidates;
    }
    return out;
}

const ConceptAnnotation* find_annotation(const DisambiguationResult& result,
                                         const std::string& lemma, Pos pos) {
    for (const auto& ann : result.concepts)
        if (ann.term.lemma == lemma && ann.term.pos == pos) return &ann;
    return nullptr;
}

}  // namespace

TEST_CASE("bank in a finance sentence: economy domain, depository sense") {
    auto doc = analyze("The banking company deposited the money in the bank.");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());

    const auto* bank = find_annotation(result, "bank", Pos::Noun);
    REQUIRE(bank != nullptr);
    CHECK(bank->domain == "economy");
    CHECK(bank->synset == SynsetId{Pos::Noun, 3001});
    CHECK_FALSE(bank->factotum_fallback);
    CHECK(bank->domain_score > 0.0);
    CHECK(bank->sense_score > 0.0);  // banking_company pins the financial sense

    // the exhaustive oracle agrees, under three positive scalings of Sim
    auto doc_terms = doc_term_map(doc.terms);
    const auto* term = find_term(doc.terms, "bank", Pos::Noun);
    REQUIRE(term != nullptr);
    const auto& ctx = doc.ctx.global.at({"bank", Pos::Noun});
    auto restricted = oracle_restricted(doc, doc_terms);
    for (double scale : {1.0, 0.37, 12.5}) {
        auto [domain, dscore] = oracle_select_domain(*term, ctx, doc_terms, scale);
        CHECK(domain == "economy");
        auto [synset, sscore] = oracle_select_sense(*term, domain, false, ctx, restricted,
                                                    scale);
        CHECK(synset == SynsetId{Pos::Noun, 3001});
    }
}

TEST_CASE("bank in a river sentence: geography domain, sloping-land sense") {
    auto doc = analyze("He sat on the bank of the river and watched the water.");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    const auto* bank = find_annotation(result, "bank", Pos::Noun);
    REQUIRE(bank != nullptr);
    CHECK(bank->domain == "geography");
    CHECK(bank->synset == SynsetId{Pos::Noun, 5001});

    const auto* term = find_term(doc.terms, "bank", Pos::Noun);
    auto doc_terms = doc_term_map(doc.terms);
    auto [domain, score] = oracle_select_domain(*term, doc.ctx.global.at({"bank", Pos::Noun}),
                                                doc_terms, 1.0);
    CHECK(domain == bank->domain);
    CHECK(score == doctest::Approx(bank->domain_score));
}

TEST_CASE("factotum fallback: every candidate domain is generic") {
    auto doc = analyze("the institution opened");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    const auto* inst = find_annotation(result, "institution", Pos::Noun);
    REQUIRE(inst != nullptr);
    CHECK(inst->domain == "factotum");
    CHECK(inst->factotum_fallback);
    CHECK(inst->domain_score == 0.0);
    CHECK(inst->synset == SynsetId{Pos::Noun, 2001});
}

TEST_CASE("empty context: tie-break picks the domain of sense one") {
    auto doc = analyze("bank");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    const auto* bank = find_annotation(result, "bank", Pos::Noun);
    REQUIRE(bank != nullptr);
    CHECK(bank->domain == "economy");  // sense 1 carries economy
    CHECK(bank->domain_score == 0.0);
    CHECK(bank->synset == SynsetId{Pos::Noun, 3001});  // all-zero scores, sense 1
    CHECK(bank->sense_score == 0.0);
}

TEST_CASE("single-sense terms return immediately with zero score") {
    auto doc = analyze("the mouse ran over the slope");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    const auto* mouse = find_annotation(result, "mouse", Pos::Noun);
    REQUIRE(mouse != nullptr);
    CHECK(mouse->synset == SynsetId{Pos::Noun, 12001});
    CHECK(mouse->sense_score == 0.0);
    CHECK(mouse->domain == "animals");
}

TEST_CASE("single-sense collocations skip both levels") {
    auto doc = analyze("the savings bank trust held money");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    const auto* trust = find_annotation(result, "savings_bank_trust", Pos::Noun);
    REQUIRE(trust != nullptr);
    CHECK(trust->synset == SynsetId{Pos::Noun, 8201});
    CHECK(trust->domain == "economy");
    CHECK(trust->domain_score == 0.0);
    CHECK(trust->sense_score == 0.0);
}

TEST_CASE("terms with zero senses demote to orphans") {
    IdentifiedTerms terms;
    TermInstance ghost{"qzxv", Pos::Verb, TermKind::Simple, {{0, 0, 1}}};
    terms.simple.push_back(ghost);
    Contexts ctx;
    ctx.local[0] = {0, {"qzxv"}};
    ctx.global[{"qzxv", Pos::Verb}] = {"qzxv", Pos::Verb, {"qzxv"}};
    auto result = disambiguate_document(terms, ctx, minilex(), domains(), ic());
    CHECK(result.concepts.empty());
    REQUIRE(result.orphans.size() == 1);
    CHECK(result.orphans[0].lemma == "qzxv");
    CHECK(result.orphans[0].kind == TermKind::Orphan);
}

TEST_CASE("one annotation per (lemma, POS) across the whole document") {
    auto doc = analyze("The bank held money. He sat on the bank of the river.");
    auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
    int bank_annotations = 0;
    for (const auto& ann : result.concepts)
        if (ann.term.lemma == "bank" && ann.term.pos == Pos::Noun) ++bank_annotations;
    CHECK(bank_annotations == 1);
    const auto* bank = find_annotation(result, "bank", Pos::Noun);
    REQUIRE(bank != nullptr);
    CHECK(bank->term.occurrences.size() == 2);  // both instances share the annotation
}

TEST_CASE("monotone restriction: level 2 narrows the level 1 sense set") {
    auto doc = analyze("The banking company deposited the money in the bank.");
    const auto* term = find_term(doc.terms, "bank", Pos::Noun);
    REQUIRE(term != nullptr);
    auto doc_terms = doc_term_map(doc.terms);
    auto restricted = oracle_restricted(doc, doc_terms);
    std::size_t all_senses = 0;
    for (Pos pos : kAllPos)
        all_senses += minilex().lookup_senses("bank", pos).senses.size();
    std::size_t pos_filtered = minilex().lookup_senses("bank", Pos::Noun).senses.size();
    std::size_t after_level2 = restricted.at({"bank", Pos::Noun}).size();
    CHECK(after_level2 <= pos_filtered);
    CHECK(pos_filtered <= all_senses);
    CHECK(after_level2 == 4);  // economy senses among the five noun senses
}

TEST_CASE("select_sense under scaled information content is invariant") {
    auto doc = analyze("The banking company deposited the money in the bank.");
    const auto* term = find_term(doc.terms, "bank", Pos::Noun);
    REQUIRE(term != nullptr);
    auto doc_terms = doc_term_map(doc.terms);
    const auto& ctx = doc.ctx.global.at({"bank", Pos::Noun});

    // frozen level-2 output via the library itself
    std::map<TermKey, std::vector<SynsetId>> restricted;
    for (const auto& [key, inst] : doc_terms) {
        auto [domain, score] = select_domain(*inst, doc.ctx.global.at(key), minilex(),
                                             domains(), doc_terms);
        std::vector<SynsetId> candidates;
        for (const auto& sense : minilex().lookup_senses(inst->lemma, inst->pos).senses) {
            const auto& labels = domains().domains_of(sense);
            if (domain == "factotum"
                || std::find(labels.begin(), labels.end(), domain) != labels.end())
                candidates.push_back(sense);
        }
        restricted[key] = candidates;
    }

    auto base = select_sense(*term, "economy", false, ctx, minilex(), domains(), ic(),
                             restricted);
    for (double scale : {0.37, 2.0, 19.5}) {
        InformationContentTable scaled;
        scaled.ic_max = ic().ic_max * scale;
        for (const auto& [id, value] : ic().ic) scaled.ic[id] = value * scale;
        auto got = select_sense(*term, "economy", false, ctx, minilex(), domains(), scaled,
                                restricted);
        CHECK(got.first == base.first);
        CHECK(got.second == doctest::Approx(base.second * scale));
    }
}

TEST_CASE("random small documents: library matches the exhaustive oracle") {
    std::vector<std::string> pool = {"bank",  "money", "river",   "water",  "deposit",
                                     "slope", "city",  "country", "war",    "treaty",
                                     "vote",  "mouse", "building", "reserve"};
    std::mt19937 rng(55211);
    for (int round = 0; round < 25; ++round) {
        std::uniform_int_distribution<int> len(2, 6);  // at most 6 ambiguous terms
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::string text;
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            if (!text.empty()) text += ' ';
            text += pool[pick(rng)];
        }
        auto doc = analyze(text);
        auto result = disambiguate_document(doc.terms, doc.ctx, minilex(), domains(), ic());
        auto doc_terms = doc_term_map(doc.terms);
        auto restricted = oracle_restricted(doc, doc_terms);

        for (const auto& ann : result.concepts) {
            TermKey key{ann.term.lemma, ann.term.pos};
            const auto& ctx = doc.ctx.global.at(key);
            auto senses = minilex().lookup_senses(key.lemma, key.pos).senses;
            if (ann.term.kind == TermKind::Collocation && senses.size() == 1) continue;
            auto [domain, dscore] = oracle_select_domain(ann.term, ctx, doc_terms, 1.0);
            CHECK(ann.domain == domain);
            CHECK(ann.domain_score == doctest::Approx(dscore));
            if (restricted.at(key).size() > 1) {
                auto [synset, sscore] = oracle_select_sense(
                    ann.term, domain, ann.factotum_fallback, ctx, restricted, 1.0);
                CHECK(ann.synset == synset);
                CHECK(ann.sense_score == doctest::Approx(sscore));
            } else {
                CHECK(ann.synset == restricted.at(key).front());
            }
        }
    }
}
