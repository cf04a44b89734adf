#include "pgst/corpus.hpp"

#include "pgst/engine.hpp"

#include <doctest.h>

#include <set>

using namespace pgst;

TEST_SUITE("corpus") {

TEST_CASE("the bundle holds ten entries in presentation order") {
    const auto& entries = bundled_corpus();
    REQUIRE(entries.size() == 10);
    std::vector<std::string> names;
    for (const CorpusEntry& e : entries) names.push_back(e.doc.name);
    CHECK(names == std::vector<std::string>{
                       "k2", "p4", "p6", "ladder_minus_rung", "rails_rung_bf", "rails_rungs_ae_cg",
                       "rails_rungs_ae_bf_dh", "chorded_rails_rung_ae", "chorded_rails_rungs_ae_cg_dh",
                       "double_chorded_rails_rungs_ae_bf"});
}

TEST_CASE("entries are loopless, unweighted and connected") {
    for (const CorpusEntry& e : bundled_corpus()) {
        CHECK(e.doc.graph.loops.empty());
        CHECK(e.doc.graph.is_connected());
        for (const auto& [u, v, w] : e.doc.graph.edges) CHECK(w == 1);
        CHECK(e.expected_p_plus.is_monic());
        CHECK(e.expected_p_minus.is_monic());
        CHECK(e.expected_p_plus.degree() == e.expected_p_minus.degree());
    }
}

TEST_CASE("one entry documents recomputed polynomials") {
    int noted = 0;
    for (const CorpusEntry& e : bundled_corpus())
        if (!e.note.empty()) {
            ++noted;
            CHECK(e.doc.name == "rails_rungs_ae_bf_dh");
        }
    CHECK(noted == 1);
}

TEST_CASE("every entry verifies end to end") {
    auto checks = run_corpus();
    REQUIRE(checks.size() == 10);
    for (const CorpusCheck& c : checks) {
        CHECK(c.passed);
        CHECK(c.certified);
        CHECK(!c.matched_pairs.empty());
        CHECK(c.detail.empty());
        CHECK(c.ratio_plus == -c.ratio_minus);
    }
    CHECK(checks[0].ratio_plus == 1);
    CHECK(checks[1].ratio_plus == Rational(1) / 2);
    CHECK(checks[2].ratio_plus == Rational(1) / 3);
    CHECK(checks[3].ratio_plus == Rational(2) / 3);
    CHECK(checks[4].ratio_plus == Rational(1) / 4);
}

TEST_CASE("matched pairs are the mirror pairs of the drawings") {
    auto checks = run_corpus();
    std::set<std::pair<int, int>> p6_pairs(checks[2].matched_pairs.begin(),
                                           checks[2].matched_pairs.end());
    CHECK(p6_pairs == std::set<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
    std::set<std::pair<int, int>> rails_pairs(checks[4].matched_pairs.begin(),
                                              checks[4].matched_pairs.end());
    CHECK(rails_pairs == std::set<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

TEST_CASE("printed polynomials match a real pair exactly") {
    for (const CorpusEntry& e : bundled_corpus()) {
        bool found = false;
        GraphAnalyzer an(e.doc.graph);
        for (int x = 0; x < e.doc.graph.n && !found; ++x)
            for (int y = x + 1; y < e.doc.graph.n && !found; ++y) {
                RelativeMinPolyPair p = an.relative_pair(x, y);
                found = p.p_plus == e.expected_p_plus && p.p_minus == e.expected_p_minus;
            }
        CHECK(found);
    }
}

TEST_CASE("matched pairs are certified by the ratio rule") {
    auto checks = run_corpus();
    const auto& entries = bundled_corpus();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        REQUIRE(!checks[i].matched_pairs.empty());
        auto [x, y] = checks[i].matched_pairs.front();
        PGSTVerdict v = decide_pgst(entries[i].doc.graph, x, y);
        CHECK(v.status == Status::PGST_CERTIFIED);
        REQUIRE(v.sufficiency.has_value());
        CHECK(v.sufficiency->ratio_plus == checks[i].ratio_plus);
    }
}

} // TEST_SUITE
