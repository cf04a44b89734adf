// Acceptance gate: one timed PASS/FAIL line per criterion, nonzero exit on
// any failure.  Each check re-derives its expectations from scratch.
#include "pgst/census.hpp"
#include "pgst/corpus.hpp"
#include "pgst/engine.hpp"
#include "pgst/involutions.hpp"
#include "pgst/paths.hpp"
#include "pgst/simulator.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pgst;

namespace {

struct Criterion {
    std::string label;
    double budget_seconds;
    std::function<void(std::string&)> run; // appends failure notes
};

bool run_all(const std::vector<Criterion>& cs) {
    bool all_ok = true;
    for (const auto& c : cs) {
        std::string notes;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(notes);
        } catch (const std::exception& e) {
            notes += std::string("exception: ") + e.what() + "; ";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            std::ostringstream os;
            os << "over budget (" << secs << " s > " << c.budget_seconds << " s); ";
            notes += os.str();
        }
        bool ok = notes.empty();
        all_ok = all_ok && ok;
        std::printf("%s  %-34s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.label.c_str(), secs,
                    notes.empty() ? "" : "  ", notes.c_str());
        std::fflush(stdout);
    }
    return all_ok;
}

void expect(std::string& notes, bool cond, const std::string& what) {
    if (!cond) notes += what + "; ";
}

Graph double_star() {
    Graph g(6);
    g.add_edge(0, 1, 1);
    g.add_edge(0, 2, 1);
    g.add_edge(0, 3, 1);
    g.add_edge(1, 4, 1);
    g.add_edge(1, 5, 1);
    return g;
}

Graph wheel5() {
    Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}}) g.add_edge(u, v, 1);
    for (int v = 0; v < 4; ++v) g.add_edge(v, 4, 1);
    return g;
}

Graph k22() {
    Graph g(4);
    for (int a : {0, 1})
        for (int b : {2, 3}) g.add_edge(a, b, 1);
    return g;
}

Graph random_graph(std::mt19937& rng, int max_n) {
    std::uniform_int_distribution<int> size(2, max_n);
    int n = size(rng);
    Graph g(n);
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) == 0) {
                int p = num(rng);
                if (p == 0) p = 1;
                g.add_edge(u, v, Rational(p) / den(rng));
            }
    return g;
}

void criterion_corpus(std::string& notes) {
    auto checks = run_corpus();
    expect(notes, checks.size() == 10, "expected 10 corpus entries");
    for (const auto& c : checks)
        expect(notes, c.passed && c.certified, "entry " + c.name + ": " + c.detail);
}

void criterion_worked_examples(std::string& notes) {
    {
        PGSTVerdict v = decide_pgst(Graph::path(8), 0, 7);
        expect(notes, v.pair.p_plus == parse_poly("x - 1") * parse_poly("x^3 - 3x - 1"),
               "path-8 P+");
        expect(notes, v.pair.p_minus == parse_poly("x + 1") * parse_poly("x^3 - 3x + 1"),
               "path-8 P-");
        expect(notes, v.status == Status::NO_PGST_CERTIFIED && v.odd_degree.has_value(),
               "path-8 verdict");
    }
    {
        PGSTVerdict v = decide_pgst(wheel5(), 0, 2);
        expect(notes, v.pair.p_plus == parse_poly("x^3 - 8x - 8"), "wheel P+");
        expect(notes, v.pair.p_minus == parse_poly("x"), "wheel P-");
        expect(notes, v.status == Status::NO_PGST_CERTIFIED && v.odd_degree.has_value(),
               "wheel verdict");
    }
    {
        PGSTVerdict v = decide_pgst(double_star(), 2, 3);
        expect(notes,
               v.pair.p_plus == parse_poly("x - 2") * parse_poly("x - 1") * parse_poly("x + 1") *
                                    parse_poly("x + 2"),
               "double-star P+");
        expect(notes, v.pair.p_minus == parse_poly("x"), "double-star P-");
        expect(notes, v.status == Status::NO_PGST_CERTIFIED && v.three_factor.has_value(),
               "double-star verdict");
        // the printed obstruction triple for this example
        ThreeFactorCertificate paper{'+', parse_poly("x - 1"),
                                     parse_poly("x + 1") * parse_poly("x + 2"), parse_poly("x")};
        expect(notes, verify_three_factor(GraphAnalyzer(double_star()).relative_pair(2, 3), paper),
               "double-star printed (f, g, h)");
    }
    {
        PGSTVerdict v = decide_pgst(Graph::complete(3), 0, 1);
        expect(notes, v.status == Status::NOT_STRONGLY_COSPECTRAL, "triangle verdict");
    }
    {
        Graph g = k22();
        QuotientPair both = quotient_pair(g, make_involution(g, {1, 0, 3, 2}));
        expect(notes, both.pi_plus == parse_poly("x^2 - 4") && both.pi_minus == parse_poly("x^2"),
               "bipartite quotients, both parts swapped");
        QuotientPair one = quotient_pair(g, make_involution(g, {1, 0, 2, 3}));
        expect(notes, one.pi_plus == parse_poly("x^3 - 4x") && one.pi_minus == parse_poly("x"),
               "bipartite quotients, one part swapped");
        RelativeMinPolyPair p = relative_pair(g, 0, 1);
        expect(notes, p.p_plus == parse_poly("x^2 - 4") && p.p_minus == parse_poly("x"),
               "bipartite relative pair");
    }
}

void criterion_path_consistency(std::string& notes) {
    EngineOptions opts;
    opts.enable_relation_search = false;
    for (int n = 2; n <= 30; ++n) {
        GraphAnalyzer an(Graph::path(n));
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                PathClassification c = classify_path(n, a, b);
                PGSTVerdict v = decide_pgst(an, a - 1, b - 1, opts);
                if (c.pgst && v.status == Status::NO_PGST_CERTIFIED) {
                    std::ostringstream os;
                    os << "refuted a transferring pair (" << n << "," << a << "," << b << ")";
                    notes += os.str() + "; ";
                }
                if (!c.pgst && v.status == Status::PGST_CERTIFIED) {
                    std::ostringstream os;
                    os << "certified a non-transferring pair (" << n << "," << a << "," << b << ")";
                    notes += os.str() + "; ";
                }
            }
    }
    expect(notes, classify_path(2, 1, 2).clause == 'b', "n=2 clause");
    expect(notes, classify_path(3, 1, 3).clause == 'a', "n=3 clause");
    expect(notes, classify_path(4, 1, 4).clause == 'b', "n=4 clause");
    expect(notes, classify_path(6, 1, 6).clause == 'b', "n=6 clause");
    expect(notes, classify_path(7, 1, 7).clause == 'a', "n=7 clause");
    expect(notes, classify_path(10, 1, 10).clause == 'b', "n=10 clause");
    PathClassification e11 = classify_path(11, 1, 11);
    expect(notes, !e11.pgst && e11.reason == "n = 2^t p - 1 but a is not a multiple of 2^(t-1)",
           "n=11 ends");
    PathClassification i11 = classify_path(11, 2, 10);
    expect(notes, i11.pgst && i11.clause == 'c' && i11.t == 2 && i11.p == 3, "n=11 inner pair");
}

void criterion_modified_paths(std::string& notes) {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (int n = 2; n <= 12; ++n) {
        for (int m = 1; 2 * m <= n; ++m) {
            ModifiedPathQuotients q = modified_path_quotients(n, m);
            for (int trial = 0; trial < 5; ++trial) {
                Rational w0 = Rational(num(rng)) / den(rng);
                Graph g = build_modified_path(n, m, w0).as_graph();
                if (q.pi_plus.specialize(w0) * q.pi_minus.specialize(w0) !=
                    char_poly(g.adjacency())) {
                    std::ostringstream os;
                    os << "product identity failed at (" << n << "," << m << "," << to_string(w0)
                       << ")";
                    notes += os.str() + "; ";
                }
            }
            if (m % 2 == 0) {
                Rational w0 = Rational(num(rng)) / den(rng);
                EvenMWitness w = even_m_witness(n, m, w0);
                Graph g = build_modified_path(n, m, w0).as_graph();
                std::vector<Rational> zero(g.n, 0);
                bool kernel = g.adjacency().apply(w.w_plus) == zero &&
                              g.adjacency().apply(w.w_minus) == zero;
                expect(notes, kernel, "witness is not in the kernel");
                expect(notes, !is_strongly_cospectral(g, 1, n).strongly_cospectral,
                       "even M should break strong cospectrality");
            }
        }
    }
    expect(notes, classify_modified_path(4, 1).verdict == ModifiedPathVerdict::PGST, "(4,1)");
    expect(notes, classify_modified_path(6, 1).verdict == ModifiedPathVerdict::PGST, "(6,1)");
    expect(notes, classify_modified_path(10, 3).verdict == ModifiedPathVerdict::PGST, "(10,3)");
    expect(notes, classify_modified_path(12, 5).verdict == ModifiedPathVerdict::PGST, "(12,5)");
    expect(notes, classify_modified_path(6, 2).verdict == ModifiedPathVerdict::NO_PGST, "(6,2)");
    expect(notes, classify_modified_path(8, 4).verdict == ModifiedPathVerdict::NO_PGST, "(8,4)");
    expect(notes, classify_modified_path(14, 3).verdict == ModifiedPathVerdict::NO_PGST, "(14,3)");
    expect(notes, classify_modified_path(5, 1).verdict == ModifiedPathVerdict::UNDECIDED, "(5,1)");
}

void criterion_property_suites(std::string& notes) {
    std::mt19937 rng(91);
    int sc_checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        Graph g = random_graph(rng, 8);
        GraphAnalyzer an(g);
        UniPoly phi = an.char_poly_of_graph();

        for (int x = 0; x < g.n; ++x)
            for (int y = x + 1; y < g.n; ++y) {
                RelativeMinPolyPair p = an.relative_pair(x, y);
                auto square_free = [](const UniPoly& q) {
                    for (const auto& [part, mult] : squarefree_decomposition(q))
                        if (mult > 1) return false;
                    return true;
                };
                expect(notes, square_free(p.p_plus), "P+ not square-free");
                expect(notes, square_free(p.p_minus), "P- not square-free");
                if (an.cospectral(x, y)) {
                    expect(notes, p.p_zero_available, "cofactor missing for a cospectral pair");
                    expect(notes, p.p_plus * p.p_minus * p.p_zero == phi, "product identity");
                }
            }

        for (const Involution& inv : find_involutions(g)) {
            QuotientPair q = quotient_pair(g, inv);
            expect(notes, q.pi_plus * q.pi_minus == phi, "involution quotient product");
        }

        if (g.n <= 7) {
            NumericSpectrum spec = numeric_eigen(an.adjacency());
            for (int x = 0; x < g.n; ++x)
                for (int y = x + 1; y < g.n; ++y) {
                    bool exact = an.cospectrality(x, y).strongly_cospectral;
                    bool numeric = strong_cospectral_numeric(spec, x, y);
                    if (exact != numeric) {
                        std::ostringstream os;
                        os << "projection test disagrees on a " << g.n << "-vertex graph pair ("
                           << x << "," << y << ")";
                        notes += os.str() + "; ";
                    }
                    ++sc_checked;
                }
        }
    }
    expect(notes, sc_checked > 1000, "projection cross-check sample too small");

    for (int k = 1; k <= 20; ++k) {
        UniPoly pk = path_poly(k), pk1 = path_poly(k - 1), p2k = path_poly(2 * k);
        expect(notes, divides(pk + pk1, p2k), "p_k + p_{k-1} should divide p_2k");
        expect(notes, divides(pk - pk1, p2k), "p_k - p_{k-1} should divide p_2k");
    }
    for (int k = 1; k <= 20; ++k)
        for (int l = 1; l <= 20; ++l) {
            PathRootIdentities r = path_root_identities(k, l);
            expect(notes, r.gcd_rule_holds, "gcd-common-root law");
        }
}

void criterion_simulator(std::string& notes) {
    double pi = std::acos(-1.0);
    {
        NumericSpectrum s = numeric_eigen(Graph::path(2).adjacency());
        expect(notes, std::abs(fidelity_at(s, 0, 1, pi / 2) - 1.0) < 1e-10, "two-vertex peak");
    }
    {
        NumericSpectrum s = numeric_eigen(Graph::path(3).adjacency());
        expect(notes, std::abs(fidelity_at(s, 0, 2, pi / std::sqrt(2.0)) - 1.0) < 1e-10,
               "three-path peak");
    }
    {
        NumericSpectrum s = numeric_eigen(Graph::complete(3).adjacency());
        FidelityTrace tr = search_max_fidelity(s, 0, 1, 50.0, 200000);
        expect(notes, std::abs(tr.best_fidelity - 2.0 / 3.0) < 1e-6, "triangle maximum");
    }
    {
        NumericSpectrum s = numeric_eigen(k22().adjacency());
        expect(notes, std::abs(fidelity_at(s, 0, 1, pi / 2) - 1.0) < 1e-10, "bipartite peak");
    }
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_graph(rng, 8);
        NumericSpectrum s = numeric_eigen(g.adjacency());
        double t = 0.3 + 0.7 * trial;
        if (unitarity_defect(s, trial % g.n, t) >= 1e-10) {
            notes += "unitarity defect too large; ";
            break;
        }
    }
}

void criterion_census(std::string& notes) {
    CensusResult a = run_census(6);
    CensusResult b = run_census(6);

    expect(notes, a.levels.size() == 5, "level count");
    expect(notes, a.hit_graphs.size() == b.hit_graphs.size(), "determinism: hit counts");
    for (std::size_t i = 0; i < a.hit_graphs.size() && i < b.hit_graphs.size(); ++i) {
        expect(notes, a.hit_graphs[i].code == b.hit_graphs[i].code, "determinism: codes");
        expect(notes, a.hit_graphs[i].hits.size() == b.hit_graphs[i].hits.size(),
               "determinism: pair lists");
    }

    // the four bundled corpus graphs of orders 2..6, by canonical code
    Graph p6 = Graph::path(6);
    Graph ladder(6);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}})
        ladder.add_edge(u, v, 1);
    std::set<std::pair<int, std::uint64_t>> wanted = {
        {2, canonical_code(Graph::path(2))},
        {4, canonical_code(Graph::path(4))},
        {6, canonical_code(p6)},
        {6, canonical_code(ladder)},
    };
    std::set<std::pair<int, std::uint64_t>> seen;
    for (const CensusGraph& hg : a.hit_graphs) seen.insert({hg.n, hg.code});
    for (const auto& w : wanted)
        expect(notes, seen.count(w) == 1, "missing corpus graph at n=" + std::to_string(w.first));

    // soundness: every reported pair re-verifies through the decision engine
    for (const CensusGraph& hg : a.hit_graphs)
        for (const CensusHit& h : hg.hits) {
            PGSTVerdict v = decide_pgst(hg.graph, h.x, h.y);
            if (v.status != Status::PGST_CERTIFIED) {
                notes += "census hit failed re-verification; ";
                return;
            }
        }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"corpus reproduction", 5.0, criterion_corpus},
        {"worked examples", 1.0, criterion_worked_examples},
        {"path classification consistency", 120.0, criterion_path_consistency},
        {"modified-path formulas", 60.0, criterion_modified_paths},
        {"property suites", 300.0, criterion_property_suites},
        {"simulator sanity", 30.0, criterion_simulator},
        {"census", 120.0, criterion_census},
    };
    bool ok = run_all(criteria);
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return ok ? 0 : 1;
}
