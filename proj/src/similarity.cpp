#include "semidx/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace semidx {

double wup_domain(std::string_view a, std::string_view b, const DomainDb& db) {
    if (db.is_generic(a) || db.is_generic(b)) throw FactotumNotComparable();
    if (a == b) return 1.0;
    auto lcs = db.least_common_subsumer(a, b);
    return 2.0 * db.depth(lcs) / (db.depth(a) + db.depth(b));
}

InformationContentTable build_ic(const LexicalDb& db) {
    InformationContentTable table;
    std::unordered_map<SynsetId, double, SynsetIdHash> counts;
    double totals[2] = {0.0, 0.0};  // per-POS virtual root counts

    // Each synset's smoothed count lands on itself and every ancestor
    // exactly once (ancestor closure, not path-weighted).
    db.for_each_synset([&](const Synset& syn) {
        if (!pos_has_hierarchy(syn.id.pos)) return;
        double c = static_cast<double>(syn.tagged_count) + 1.0;
        totals[pos_index(syn.id.pos)] += c;
        for (const auto& ancestor : db.ancestors(syn.id)) counts[ancestor] += c;
    });

    for (const auto& [id, count] : counts) {
        double total = totals[pos_index(id.pos)];
        double value = -std::log(count / total);
        if (value < 0.0) value = 0.0;  // guard fp noise at the root
        table.ic[id] = value;
        table.ic_max = std::max(table.ic_max, value);
    }
    return table;
}

double resnik(SynsetId a, SynsetId b, const LexicalDb& db,
              const InformationContentTable& ic) {
    if (a.pos != b.pos) return 0.0;
    if (!pos_has_hierarchy(a.pos)) return 0.0;
    auto lcs = db.least_common_subsumer(a, b);
    if (!lcs) return 0.0;
    return ic.of(*lcs);
}

double resnik_norm(SynsetId a, SynsetId b, const LexicalDb& db,
                   const InformationContentTable& ic) {
    if (ic.ic_max <= 0.0) return 0.0;
    return resnik(a, b, db, ic) / ic.ic_max;
}

void dump_ic(const InformationContentTable& table, std::ostream& out) {
    std::map<SynsetId, double> sorted(table.ic.begin(), table.ic.end());
    for (const auto& [id, value] : sorted) out << to_string(id) << '\t' << value << '\n';
}

}  // namespace semidx
