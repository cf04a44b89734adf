#include "pgst/involutions.hpp"
#include "pgst/paths.hpp"
#include "pgst/spectra.hpp"

#include <doctest.h>

using namespace pgst;

namespace {

Graph k22() {
    Graph g(4);
    for (int a : {0, 1})
        for (int b : {2, 3}) g.add_edge(a, b, 1);
    return g;
}

Graph wheel5() {
    Graph g(5);
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}}) g.add_edge(u, v, 1);
    for (int v = 0; v < 4; ++v) g.add_edge(v, 4, 1);
    return g;
}

} // namespace

TEST_SUITE("involutions") {

TEST_CASE("triangle has three involutions in lexicographic order") {
    auto invs = find_involutions(Graph::complete(3));
    REQUIRE(invs.size() == 3);
    CHECK(invs[0].sigma == std::vector<int>{0, 2, 1});
    CHECK(invs[1].sigma == std::vector<int>{1, 0, 2});
    CHECK(invs[2].sigma == std::vector<int>{2, 1, 0});
    CHECK(invs[1].reps == std::vector<int>{0});
    CHECK(invs[1].fixed == std::vector<int>{2});
}

TEST_CASE("triangle quotient blocks and polynomials") {
    Graph g = Graph::complete(3);
    QuotientPair q = quotient_pair(g, make_involution(g, {1, 0, 2}));
    // rows/cols: swapped-pair rep first, fixed vertex last
    CHECK(q.a_plus.at(0, 0) == 1);
    CHECK(q.a_plus.at(0, 1) == 1);
    CHECK(q.a_plus.at(1, 0) == 2); // doubled edge into the fixed block
    CHECK(q.a_plus.at(1, 1) == 0);
    CHECK(!q.a_plus.is_symmetric());
    CHECK(q.pi_plus == parse_poly("x^2 - x - 2"));
    CHECK(q.pi_minus == parse_poly("x + 1"));
    CHECK(q.pi_plus * q.pi_minus == char_poly(g.adjacency()));
}

TEST_CASE("quotients multiply to the characteristic polynomial") {
    for (const Graph& g : {Graph::complete(3), Graph::path(6), Graph::cycle(6), k22(), wheel5()}) {
        UniPoly phi = char_poly(g.adjacency());
        auto invs = find_involutions(g);
        CHECK(!invs.empty());
        for (const Involution& inv : invs) {
            QuotientPair q = quotient_pair(g, inv);
            CHECK(q.pi_plus * q.pi_minus == phi);
        }
    }
}

TEST_CASE("complete bipartite quotients from the worked pair") {
    Graph g = k22();
    auto invs = find_involutions(g);
    CHECK(invs.size() == 5);

    QuotientPair both = quotient_pair(g, make_involution(g, {1, 0, 3, 2}));
    CHECK(both.pi_plus == parse_poly("x^2 - 4"));
    CHECK(both.pi_minus == parse_poly("x^2"));

    QuotientPair one = quotient_pair(g, make_involution(g, {1, 0, 2, 3}));
    CHECK(one.pi_plus == parse_poly("x^3 - 4x"));
    CHECK(one.pi_minus == parse_poly("x"));
}

TEST_CASE("involution construction is validated") {
    Graph g = Graph::path(3);
    CHECK_THROWS(make_involution(g, {0, 1, 2}));    // identity
    CHECK_THROWS(make_involution(g, {1, 2, 0}));    // order three
    CHECK_THROWS(make_involution(g, {1, 0, 2}));    // not an automorphism
    CHECK_NOTHROW(make_involution(g, {2, 1, 0}));   // the mirror

    Graph w(2);
    w.add_edge(0, 1, 1);
    w.add_loop(0, Rational(1) / 2);
    CHECK(find_involutions(w).empty()); // loop breaks the swap
}

TEST_CASE("weighted involution search respects weights") {
    Graph g(4); // star with one heavy edge
    g.add_edge(0, 1, 1);
    g.add_edge(0, 2, 1);
    g.add_edge(0, 3, Rational(1) / 2);
    auto invs = find_involutions(g);
    REQUIRE(invs.size() == 1);
    CHECK(invs[0].sigma == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("modified path carries its mirror involution") {
    Graph g = build_modified_path(14, 3, Rational(5) / 2).as_graph();
    auto invs = find_involutions(g);
    bool mirror = false;
    for (const Involution& inv : invs) {
        bool ok = true;
        for (int v = 0; v < g.n; ++v) ok = ok && inv.sigma[v] == g.n - 1 - v;
        mirror = mirror || ok;
    }
    CHECK(mirror);
}

TEST_CASE("symbolic quotients and the quadratic decomposition") {
    Graph base(5);
    // make sigma = (3 4 2 0 1) an automorphism of the base: no edges needed
    Involution inv;
    inv.sigma = {3, 4, 2, 0, 1};
    inv.reps = {0, 1};
    inv.fixed = {2};
    SymbolicQuotients q = symbolic_quotient_pair(base, inv, 0, 1);
    WeightPoly w = WeightPoly::w_symbol();
    WeightPoly x = WeightPoly::from_x_poly(UniPoly::x());
    CHECK(q.pi_plus == x * x * x - w * w * x);
    CHECK(q.pi_minus == x * x - w * w);

    WeightDecomposition plus = weighted_edge_decomposition(q.pi_plus);
    CHECK(plus.g == parse_poly("x"));
    CHECK(plus.p == parse_poly("x^2"));
    CHECK(plus.q == UniPoly{1});
    CHECK(plus.p_square);
    CHECK(plus.q_square);
    CHECK(poly_gcd(plus.p, plus.q) == UniPoly{1});

    WeightDecomposition minus = weighted_edge_decomposition(q.pi_minus);
    CHECK(minus.g == UniPoly{1});
    CHECK(minus.p == parse_poly("x^2"));
    CHECK(minus.q == UniPoly{1});
}

TEST_CASE("self-mirrored edge orbit decomposes at the product level") {
    Graph base(2);
    Involution inv;
    inv.sigma = {1, 0};
    inv.reps = {0};
    inv.fixed = {};
    EdgeDecomposition d = weighted_edge_decomposition(base, inv, 0, 1);
    CHECK(!d.per_side);
    CHECK(d.plus.g == UniPoly{1});
    CHECK(d.plus.p == parse_poly("x^2"));
    CHECK(d.plus.q == UniPoly{1});
    // sides are linear in w: (x - w)(x + w)
    CHECK(d.quotients.pi_plus.degree_w() == 1);
    CHECK(d.quotients.pi_plus * d.quotients.pi_minus ==
          WeightPoly::from_x_poly(parse_poly("x^2")) -
              WeightPoly::w_symbol() * WeightPoly::w_symbol());
}

TEST_CASE("odd weight terms cannot be decomposed") {
    // sigma-fixed edge through an odd cycle: triangle with symbolic tip edge
    Graph base(3);
    base.add_edge(0, 2, 1);
    base.add_edge(1, 2, 1);
    Involution inv = make_involution(base, {1, 0, 2});
    SymbolicQuotients q = symbolic_quotient_pair(base, inv, 0, 1);
    WeightPoly phi = q.pi_plus * q.pi_minus;
    CHECK_THROWS(weighted_edge_decomposition(phi));
}

TEST_CASE("symbolic edge must be absent from the base graph") {
    Graph base = Graph::path(2);
    Involution inv = make_involution(base, {1, 0});
    CHECK_THROWS(symbolic_quotient_pair(base, inv, 0, 1));
}

} // TEST_SUITE
