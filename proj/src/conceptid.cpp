#include "semidx/conceptid.hpp"

#include <algorithm>

namespace semidx {

std::string_view term_kind_name(TermKind kind) {
    switch (kind) {
        case TermKind::Collocation: return "collocation";
        case TermKind::Simple: return "simple";
        case TermKind::Orphan: return "orphan";
    }
    return "?";
}

CollocationLexicon CollocationLexicon::build(const LexicalDb& db) {
    CollocationLexicon lex;
    // kAllPos order makes Noun win for entries present under several POS.
    std::map<std::string, Pos> seen;
    db.for_each_entry([&](const std::string& lemma, Pos pos, const std::vector<SynsetId>&) {
        if (lemma.find('_') == std::string::npos) return;
        auto it = seen.find(lemma);
        if (it != seen.end()) {
            if (pos_index(pos) < pos_index(it->second)) it->second = pos;
            return;
        }
        seen.emplace(lemma, pos);
    });
    for (const auto& [lemma, pos] : seen) {
        std::size_t size = 1 + static_cast<std::size_t>(
                                   std::count(lemma.begin(), lemma.end(), '_'));
        auto first = lemma.substr(0, lemma.find('_'));
        lex.by_first_word_[first].push_back({lemma, size, pos});
        ++lex.count_;
    }
    for (auto& [first, entries] : lex.by_first_word_) {
        std::sort(entries.begin(), entries.end(),
                  [](const CollocationEntry& a, const CollocationEntry& b) {
                      if (a.size != b.size) return a.size > b.size;
                      return a.lemma < b.lemma;
                  });
    }
    return lex;
}

const std::vector<CollocationEntry>* CollocationLexicon::candidates(
    std::string_view first_word) const {
    auto it = by_first_word_.find(std::string(first_word));
    return it == by_first_word_.end() ? nullptr : &it->second;
}

const TermInstance* IdentifiedTerms::find(const TermKey& key) const {
    for (const auto* set : {&expressions, &simple, &orphans}) {
        for (const auto& t : *set)
            if (t.lemma == key.lemma && t.pos == key.pos) return &t;
    }
    return nullptr;
}

namespace {

// Head-word forms a collocation may start with: the norm itself plus its
// morphy bases under every POS.
std::vector<std::string> head_variants(const std::string& norm, const LexicalDb& db) {
    std::vector<std::string> out{norm};
    for (Pos pos : kAllPos) {
        for (auto& base : db.morphy(norm, pos))
            if (std::find(out.begin(), out.end(), base) == out.end())
                out.push_back(std::move(base));
    }
    return out;
}

void merge_instance(std::map<std::pair<TermKey, TermKind>, TermInstance>& acc,
                    std::string lemma, Pos pos, TermKind kind, Occurrence occ) {
    auto key = std::make_pair(TermKey{lemma, pos}, kind);
    auto it = acc.find(key);
    if (it == acc.end()) {
        TermInstance inst{std::move(lemma), pos, kind, {occ}};
        acc.emplace(std::move(key), std::move(inst));
    } else {
        it->second.occurrences.push_back(occ);
    }
}

}  // namespace

IdentifiedTerms identify_terms(std::span<const TaggedToken> doc, const CollocationLexicon& lex,
                               const LexicalDb& db) {
    std::map<std::pair<TermKey, TermKind>, TermInstance> acc;

    std::size_t i = 0;
    while (i < doc.size()) {
        const TaggedToken& tt = doc[i];
        const std::string& norm = tt.token.norm;

        // Candidate collocations over all head variants, longest first.
        struct Candidate {
            const CollocationEntry* entry;
            const std::string* head;
        };
        std::vector<Candidate> candidates;
        auto variants = head_variants(norm, db);
        for (const auto& head : variants) {
            if (const auto* list = lex.candidates(head))
                for (const auto& entry : *list) candidates.push_back({&entry, &head});
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) {
                             if (a.entry->size != b.entry->size)
                                 return a.entry->size > b.entry->size;
                             return a.entry->lemma < b.entry->lemma;
                         });

        std::size_t matched_span = 0;
        const CollocationEntry* matched = nullptr;
        for (const auto& [entry, head] : candidates) {
            std::size_t span = entry->size;
            if (span < 2 || i + span > doc.size()) continue;
            bool same_sentence = true;
            for (std::size_t k = 1; k < span; ++k)
                if (doc[i + k].token.sentence_idx != tt.token.sentence_idx) {
                    same_sentence = false;
                    break;
                }
            if (!same_sentence) continue;
            std::string expression = *head;
            for (std::size_t k = 1; k < span; ++k) {
                expression += '_';
                expression += doc[i + k].token.norm;
            }
            if (expression == entry->lemma) {
                matched = entry;
                matched_span = span;
                break;
            }
        }

        if (matched) {
            merge_instance(acc, matched->lemma, matched->pos, TermKind::Collocation,
                           {tt.token.sentence_idx, tt.token.position, matched_span});
            i += matched_span;
            continue;
        }

        if (!tt.token.is_stopword) {
            Occurrence occ{tt.token.sentence_idx, tt.token.position, 1};
            if (tt.pos) {
                auto bases = db.morphy(norm, *tt.pos);
                if (!bases.empty()) {
                    merge_instance(acc, bases.front(), *tt.pos, TermKind::Simple, occ);
                } else {
                    merge_instance(acc, norm, *tt.pos, TermKind::Orphan, occ);
                }
            } else {
                merge_instance(acc, norm, Pos::Noun, TermKind::Orphan, occ);
            }
        }
        ++i;
    }

    IdentifiedTerms out;
    for (auto& [key, inst] : acc) {
        switch (key.second) {
            case TermKind::Collocation: out.expressions.push_back(std::move(inst)); break;
            case TermKind::Simple: out.simple.push_back(std::move(inst)); break;
            case TermKind::Orphan: out.orphans.push_back(std::move(inst)); break;
        }
    }
    return out;
}

Contexts build_contexts(const IdentifiedTerms& terms) {
    Contexts ctx;
    auto collect = [&](const std::vector<TermInstance>& set) {
        for (const auto& t : set) {
            for (const auto& occ : t.occurrences) {
                auto& local = ctx.local[occ.sentence_idx];
                local.sentence_idx = occ.sentence_idx;
                local.terms.insert(t.lemma);
            }
        }
    };
    collect(terms.expressions);
    collect(terms.simple);
    collect(terms.orphans);

    auto globalize = [&](const std::vector<TermInstance>& set) {
        for (const auto& t : set) {
            GlobalContext& g = ctx.global[key_of(t)];
            g.lemma = t.lemma;
            g.pos = t.pos;
            for (const auto& occ : t.occurrences) {
                const auto& local = ctx.local.at(occ.sentence_idx);
                g.terms.insert(local.terms.begin(), local.terms.end());
            }
        }
    };
    globalize(terms.expressions);
    globalize(terms.simple);
    globalize(terms.orphans);
    return ctx;
}

}  // namespace semidx
