#include "pgst/paths.hpp"
#include "pgst/spectra.hpp"

#include <doctest.h>

#include <set>

using namespace pgst;

TEST_SUITE("paths") {

TEST_CASE("path polynomial recurrence") {
    CHECK(path_poly(0) == UniPoly{1});
    CHECK(path_poly(1) == parse_poly("x"));
    CHECK(path_poly(2) == parse_poly("x^2 - 1"));
    CHECK(path_poly(6) == parse_poly("x^3 - x^2 - 2x + 1") * parse_poly("x^3 + x^2 - 2x - 1"));
    for (int k = 2; k <= 12; ++k)
        CHECK(path_poly(k) == UniPoly::x() * path_poly(k - 1) - path_poly(k - 2));
    CHECK(path_poly(9) == char_poly(Graph::path(9).adjacency()));
    CHECK_THROWS(path_poly(-1));
}

TEST_CASE("unweighted path classification") {
    PathClassification c = classify_path(4, 1, 4);
    CHECK(c.pgst);
    CHECK(c.clause == 'b');
    CHECK(c.p == 5);

    c = classify_path(7, 3, 5);
    CHECK(c.pgst);
    CHECK(c.clause == 'a');

    c = classify_path(11, 2, 10);
    CHECK(c.pgst);
    CHECK(c.clause == 'c');
    CHECK(c.t == 2);
    CHECK(c.p == 3);

    c = classify_path(5, 1, 5);
    CHECK(c.pgst);
    CHECK(c.clause == 'c');
    CHECK(c.t == 1);
    CHECK(c.p == 3);

    c = classify_path(8, 1, 8);
    CHECK(!c.pgst);
    CHECK(c.reason == "n + 1 is neither a power of two nor 2^t times an odd prime");

    c = classify_path(11, 1, 11);
    CHECK(!c.pgst);
    CHECK(c.reason == "n = 2^t p - 1 but a is not a multiple of 2^(t-1)");

    c = classify_path(8, 2, 6);
    CHECK(!c.pgst);
    CHECK(c.reason == "a + b != n + 1");

    CHECK_THROWS(classify_path(4, 0, 5));
    CHECK_THROWS(classify_path(4, 1, 6));
}

TEST_CASE("end-vertex transfer set up to thirty") {
    std::set<int> got;
    for (int n = 2; n <= 30; ++n)
        if (classify_path(n, 1, n).pgst) got.insert(n);
    std::set<int> want = {2, 3, 4, 5, 6, 7, 9, 10, 12, 13, 15, 16, 18, 21, 22, 25, 28, 30};
    CHECK(got == want);
}

TEST_CASE("modified path construction") {
    ModifiedPath mp = build_modified_path(4, 1, Rational(1));
    Graph g = mp.as_graph();
    CHECK(g.n == 6);
    CHECK(g.edges.size() == 5);
    CHECK(g.weight(0, 1) == 1);
    CHECK(g.weight(4, 5) == 1);
    // all weights one: this is the plain 6-path
    CHECK(char_poly(g.adjacency()) == path_poly(6));

    ModifiedPath mirrored = build_modified_path(6, 4, Rational(1));
    CHECK(mirrored.canonicalized);
    CHECK(mirrored.m == 3);

    CHECK_THROWS(build_modified_path(4, 1, Rational(0)));
    CHECK_THROWS(build_modified_path(5, 3, Rational(1))); // self-mirror stays out of range
    CHECK_THROWS(build_modified_path(4, 5, Rational(1)));
    CHECK_THROWS(build_modified_path(0, 1, Rational(1)));
    CHECK_THROWS(build_modified_path(4, 1, std::nullopt).as_graph()); // symbolic

    Graph h = build_modified_path(14, 3, Rational(5) / 2).as_graph();
    CHECK(h.n == 16);
    CHECK(h.weight(0, 3) == Rational(5) / 2);
    CHECK(h.weight(12, 15) == Rational(5) / 2);
}

TEST_CASE("quotient closed forms multiply to the characteristic polynomial") {
    for (int n = 2; n <= 9; ++n) {
        for (int m = 1; 2 * m <= n; ++m) {
            ModifiedPathQuotients q = modified_path_quotients(n, m);
            Rational w0 = Rational(2) / 3;
            Graph g = build_modified_path(n, m, w0).as_graph();
            CHECK(q.pi_plus.specialize(w0) * q.pi_minus.specialize(w0) ==
                  char_poly(g.adjacency()));
        }
    }
}

TEST_CASE("known quotient pairs") {
    ModifiedPathQuotients q = modified_path_quotients(2, 1);
    WeightPoly w2 = WeightPoly::w_symbol() * WeightPoly::w_symbol();
    WeightPoly x = WeightPoly::from_x_poly(UniPoly::x());
    CHECK(q.pi_plus == x * x - x - w2);
    CHECK(q.pi_minus == x * x + x - w2);

    // at w = 1 the (4,1) case degenerates to the 6-path
    q = modified_path_quotients(4, 1);
    CHECK(q.pi_plus.specialize(1) * q.pi_minus.specialize(1) == path_poly(6));
    CHECK(q.pi_plus.str() == "x^3 + (-1)x^2 + (-w^2 - 1)x + (w^2)");
}

TEST_CASE("transcendental-weight classification") {
    CHECK(classify_modified_path(4, 1).verdict == ModifiedPathVerdict::PGST);
    CHECK(classify_modified_path(4, 1).clause == "1: M odd, N even, gcd(N+1, M) = 1");
    CHECK(classify_modified_path(12, 5).verdict == ModifiedPathVerdict::PGST);
    CHECK(classify_modified_path(6, 2).verdict == ModifiedPathVerdict::NO_PGST);
    CHECK(classify_modified_path(6, 2).clause == "2a: M is even");
    CHECK(classify_modified_path(8, 4).verdict == ModifiedPathVerdict::NO_PGST);
    CHECK(classify_modified_path(14, 3).verdict == ModifiedPathVerdict::NO_PGST);
    CHECK(classify_modified_path(14, 3).clause ==
          "2b: gcd(N+1, M) has a prime factor 4r+3 and N = 2 mod 4");
    CHECK(classify_modified_path(5, 1).verdict == ModifiedPathVerdict::UNDECIDED);
    CHECK(classify_modified_path(5, 1).clause == "no clause applies");
}

TEST_CASE("even attachment index yields an exact kernel witness") {
    EvenMWitness w = even_m_witness(4, 2, Rational(1));
    CHECK(w.z[0] == -1);
    CHECK(w.z[1] == 1);
    CHECK(w.z[3] == 0);

    EvenMWitness v = even_m_witness(8, 2, Rational(3));
    CHECK(v.z[0] == Rational(-1) / 3);

    Graph g = build_modified_path(8, 2, Rational(3)).as_graph();
    RationalMatrix a = g.adjacency();
    std::vector<Rational> zero(g.n, 0);
    CHECK(a.apply(v.w_plus) == zero);
    CHECK(a.apply(v.w_minus) == zero);
    CHECK(v.w_plus[1] == v.w_plus[8]);
    CHECK(v.w_minus[1] == -v.w_minus[8]);

    // both sign patterns at eigenvalue zero break strong cospectrality
    CHECK(!is_strongly_cospectral(g, 1, 8).strongly_cospectral);

    CHECK_THROWS(even_m_witness(4, 1, Rational(1)));  // odd M
    CHECK_THROWS(even_m_witness(6, 4, Rational(1)));  // out of canonical range
    CHECK_THROWS(even_m_witness(4, 2, Rational(0)));
}

TEST_CASE("root identities of the path polynomials") {
    PathRootIdentities r = path_root_identities(5, 3);
    CHECK(r.plus_divides);
    CHECK(r.minus_divides);
    CHECK(r.common_factor == parse_poly("x")); // gcd(6, 4) = 2 -> p_1
    CHECK(r.have_common_roots);
    CHECK(r.gcd_rule_holds);

    r = path_root_identities(4, 2);
    CHECK(r.common_factor == UniPoly{1}); // gcd(5, 3) = 1
    CHECK(!r.have_common_roots);
    CHECK(r.gcd_rule_holds);

    for (int k = 1; k <= 12; ++k) {
        PathRootIdentities s = path_root_identities(k, k / 2 + 1);
        CHECK(s.plus_divides);
        CHECK(s.minus_divides);
        CHECK(s.gcd_rule_holds);
    }
}

} // TEST_SUITE
