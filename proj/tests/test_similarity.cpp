#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "semidx/similarity.hpp"
#include "testutil.hpp"

using namespace semidx;
using testutil::SynSpec;

namespace {

const LexicalDb& minilex() {
    static LexicalDb db = LexicalDb::load(WordNetPaths::from_dir(testutil::minilex_dir()));
    return db;
}

const DomainDb& full_domains() {
    static DomainDb db =
        DomainDb::load(testutil::minidomains_mapping(), testutil::domain_hierarchy());
    return db;
}

// top_level(1) -> sport(2) -> tennis(3); top_level -> art(2)
DomainDb wup_fixture() {
    testutil::TempDir tmp("wupfix");
    testutil::write_file(tmp.file("hierarchy.txt"),
                         "top_level\t-\nsport\ttop_level\ntennis\tsport\nart\ttop_level\n");
    testutil::write_file(tmp.file("mapping.txt"), "");
    return DomainDb::load(tmp.file("mapping.txt"), tmp.file("hierarchy.txt"));
}

SynsetId noun(unsigned offset) { return {Pos::Noun, offset}; }

}  // namespace

TEST_CASE("wup_domain on the small fixture hierarchy") {
    auto db = wup_fixture();
    CHECK(wup_domain("tennis", "tennis", db) == doctest::Approx(1.0));
    CHECK(wup_domain("sport", "sport", db) == doctest::Approx(1.0));
    // 2*depth(sport) / (depth(tennis) + depth(sport)) = 2*2 / (3+2)
    CHECK(wup_domain("tennis", "sport", db) == doctest::Approx(0.8));
    // lcs(tennis, art) = top_level: 2*1 / (3+2)
    CHECK(wup_domain("tennis", "art", db) == doctest::Approx(0.4));
    CHECK_THROWS_AS(wup_domain("tennis", "factotum", db), FactotumNotComparable);
    CHECK_THROWS_AS(wup_domain("tennis", "no_such_domain", db), UnknownDomainLabel);
}

TEST_CASE("shipped hierarchy: Table 3 spot checks") {
    const auto& db = full_domains();
    CHECK(db.node("history").parent == "humanities");
    CHECK(db.node("grammar").parent == "linguistics");
    CHECK(db.node("philology").parent == "literature");
    CHECK(db.node("psychoanalysis").parent == "philosophy");
    CHECK(db.node("music").parent == "art");
    CHECK(db.node("jewellery").parent == "plastic_arts");
    CHECK(db.node("sculpture").parent == "plastic_arts");
    CHECK(db.node("anatomy").parent == "biology");
    CHECK(db.node("geology").parent == "earth");
    CHECK(db.node("geography").parent == "earth");
    CHECK(db.node("acoustics").parent == "physics");
    CHECK(db.node("economy").parent == "social_science");
    CHECK(db.node("finance").parent == "economy");
    CHECK(db.node("money").parent == "finance");
    CHECK(db.node("tennis").parent == "sport");
    CHECK(db.node("buildings").parent == "architecture");
    CHECK(db.node("top_level").depth == 1);
    CHECK(db.node("money").depth == 5);
    CHECK(db.node("factotum").is_factotum);
    CHECK(db.is_generic("quality"));  // factotum branch is generic
    CHECK(wup_domain("geography", "geology", db)
          == doctest::Approx(2.0 * 3 / (4 + 4)));  // lcs = earth
    CHECK(wup_domain("geography", "economy", db)
          == doctest::Approx(2.0 * 1 / (4 + 3)));  // lcs = top_level
}

TEST_CASE("domains_of: annotations and the factotum default") {
    const auto& db = full_domains();
    auto river_bank = db.domains_of(noun(5001));
    REQUIRE(river_bank.size() == 2);
    CHECK(river_bank[0] == "geography");
    CHECK(river_bank[1] == "geology");
    CHECK(db.domains_of(noun(7101)) == std::vector<std::string>{"factotum", "economy"});
    // unmapped synset answers {factotum}
    CHECK(db.domains_of(noun(2001)) == std::vector<std::string>{"factotum"});
    CHECK_FALSE(db.domains_of(noun(12345678)).empty());
}

TEST_CASE("domain hierarchy errors") {
    SUBCASE("unknown label in mapping") {
        testutil::TempDir tmp("dom1");
        testutil::write_file(tmp.file("hierarchy.txt"), "top_level\t-\n");
        testutil::write_file(tmp.file("mapping.txt"), "00000001-n\tno_such_domain\n");
        CHECK_THROWS_AS(DomainDb::load(tmp.file("mapping.txt"), tmp.file("hierarchy.txt")),
                        UnknownDomainLabel);
    }
    SUBCASE("cycle") {
        testutil::TempDir tmp("dom2");
        testutil::write_file(tmp.file("hierarchy.txt"), "top_level\t-\na\tb\nb\ta\n");
        testutil::write_file(tmp.file("mapping.txt"), "");
        CHECK_THROWS_AS(DomainDb::load(tmp.file("mapping.txt"), tmp.file("hierarchy.txt")),
                        CycleInHierarchy);
    }
    SUBCASE("orphan parent") {
        testutil::TempDir tmp("dom3");
        testutil::write_file(tmp.file("hierarchy.txt"), "top_level\t-\na\tmissing\n");
        testutil::write_file(tmp.file("mapping.txt"), "");
        CHECK_THROWS_AS(DomainDb::load(tmp.file("mapping.txt"), tmp.file("hierarchy.txt")),
                        UnknownDomainLabel);
    }
}

TEST_CASE("build_ic: smoothed descendant-inclusive counts") {
    // root with two leaves, tagged counts 0: each leaf P = 1/3, ic = ln 3
    testutil::TempDir tmp("ic3");
    testutil::write_wordnet_fixture(tmp.path(), {
                                                    {1, 'n', {"root"}, {}, 0},
                                                    {2, 'n', {"left"}, {1}, 0},
                                                    {3, 'n', {"right"}, {1}, 0},
                                                });
    auto db = LexicalDb::load(WordNetPaths::from_dir(tmp.path()));
    auto ic = build_ic(db);
    CHECK(ic.of(noun(1)) == doctest::Approx(0.0));
    CHECK(ic.of(noun(2)) == doctest::Approx(std::log(3.0)));
    CHECK(ic.of(noun(3)) == doctest::Approx(std::log(3.0)));
    CHECK(ic.ic_max == doctest::Approx(std::log(3.0)));

    // resnik(leaf, leaf') = ic(root) = 0; resnik(x, x) = ic(x)
    CHECK(resnik(noun(2), noun(3), db, ic) == doctest::Approx(0.0));
    CHECK(resnik(noun(2), noun(2), db, ic) == doctest::Approx(std::log(3.0)));
    CHECK(resnik_norm(noun(2), noun(2), db, ic) == doctest::Approx(1.0));
}

TEST_CASE("ic is monotone non-increasing from child to parent") {
    const auto& db = minilex();
    auto ic = build_ic(db);
    db.for_each_synset([&](const Synset& syn) {
        if (!pos_has_hierarchy(syn.id.pos)) return;
        for (const auto& parent : syn.hypernyms) CHECK(ic.of(syn.id) >= ic.of(parent));
    });
    CHECK(ic.ic_max > 0.0);
}

TEST_CASE("resnik conventions: cross-POS and hierarchy-less POS are zero") {
    const auto& db = minilex();
    auto ic = build_ic(db);
    CHECK(resnik(noun(3001), {Pos::Verb, 9102001}, db, ic) == 0.0);
    SynsetId steep{Pos::Adjective, 9800001};
    CHECK(resnik(steep, steep, db, ic) == 0.0);
    CHECK(resnik_norm(steep, steep, db, ic) == 0.0);
    CHECK(resnik(noun(3001), noun(3101), db, ic) > 0.0);
}

TEST_CASE("oracle equivalence on random fixtures: ic, resnik, wup symmetry") {
    std::mt19937 rng(77231);
    for (int round = 0; round < 4; ++round) {
        int n = 10 + static_cast<int>(rng() % 21);  // up to 30 nodes
        auto oracle = testutil::random_dag(rng, n);
        std::map<unsigned, unsigned> tags;
        std::vector<SynSpec> specs;
        for (const auto& [node, parents] : oracle.nodes()) {
            unsigned tag = rng() % 50;
            tags[node] = tag;
            specs.push_back({node, 'n', {"w" + std::to_string(node)}, parents, tag});
        }
        testutil::TempDir tmp("icoracle");
        testutil::write_wordnet_fixture(tmp.path(), specs);
        auto db = LexicalDb::load(WordNetPaths::from_dir(tmp.path()));
        auto ic = build_ic(db);
        auto expected_ic = oracle.information_content(tags);

        for (const auto& [node, value] : expected_ic)
            CHECK(ic.of(noun(node)) == doctest::Approx(value));

        for (const auto& [a, pa] : oracle.nodes()) {
            for (const auto& [b, pb] : oracle.nodes()) {
                double ab = resnik(noun(a), noun(b), db, ic);
                double ba = resnik(noun(b), noun(a), db, ic);
                CHECK(ab == doctest::Approx(ba));  // symmetry
                auto lcs = oracle.lcs(a, b);
                REQUIRE(lcs.has_value());
                CHECK(ab == doctest::Approx(expected_ic.at(*lcs)));
                // self-maximality
                CHECK(resnik(noun(a), noun(a), db, ic) >= ab - 1e-12);
                double norm = resnik_norm(noun(a), noun(b), db, ic);
                CHECK(norm >= 0.0);
                CHECK(norm <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("wup_domain symmetry, range, and self-maximality over the shipped tree") {
    const auto& db = full_domains();
    std::vector<std::string> labels;
    for (const auto& [name, node] : db.nodes())
        if (!node.is_factotum) labels.push_back(name);
    std::mt19937 rng(4242);
    std::shuffle(labels.begin(), labels.end(), rng);
    labels.resize(std::min<std::size_t>(labels.size(), 25));
    for (const auto& a : labels) {
        for (const auto& b : labels) {
            double ab = wup_domain(a, b, db);
            CHECK(ab == doctest::Approx(wup_domain(b, a, db)));
            CHECK(ab > 0.0);
            CHECK(ab <= 1.0 + 1e-12);
            CHECK(wup_domain(a, a, db) >= ab - 1e-12);
        }
    }
}

TEST_CASE("ic debug dump is sorted by synset id") {
    testutil::TempDir tmp("icdump");
    testutil::write_wordnet_fixture(tmp.path(), {
                                                    {1, 'n', {"root"}, {}, 2},
                                                    {2, 'n', {"leaf"}, {1}, 1},
                                                });
    auto db = LexicalDb::load(WordNetPaths::from_dir(tmp.path()));
    auto ic = build_ic(db);
    std::ostringstream out;
    dump_ic(ic, out);
    std::ostringstream expected;
    expected << "00000001-n\t" << ic.of(noun(1)) << "\n00000002-n\t" << ic.of(noun(2)) << "\n";
    CHECK(out.str() == expected.str());
}
