#include "pgst/factor.hpp"

#include <doctest.h>

using namespace pgst;

TEST_SUITE("factor") {

TEST_CASE("splits the path-8 characteristic polynomial") {
    UniPoly phi = parse_poly("x^8 - 7x^6 + 15x^4 - 10x^2 + 1");
    Factorization f = factor_over_Q(phi);
    CHECK(f.unit == 1);
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].first == parse_poly("x - 1"));
    CHECK(f.factors[1].first == parse_poly("x + 1"));
    CHECK(f.factors[2].first == parse_poly("x^3 - 3x - 1"));
    CHECK(f.factors[3].first == parse_poly("x^3 - 3x + 1"));
    for (const auto& [p, e] : f.factors) CHECK(e == 1);
    CHECK(f.expand() == phi);
}

TEST_CASE("tracks units and multiplicities") {
    Factorization f = factor_over_Q(parse_poly("2x^2 - 4x + 2")); // 2 (x-1)^2
    CHECK(f.unit == 2);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<UniPoly, int>{parse_poly("x - 1"), 2});
    CHECK(f.expand() == parse_poly("2x^2 - 4x + 2"));

    Factorization c = factor_over_Q(UniPoly::constant(Rational(3) / 4));
    CHECK(c.unit == Rational(3) / 4);
    CHECK(c.factors.empty());
}

TEST_CASE("keeps irreducible polynomials whole") {
    CHECK(is_irreducible(parse_poly("x^3 - 3x - 1")));
    CHECK(is_irreducible(parse_poly("x^2 - 2")));
    CHECK(is_irreducible(parse_poly("x - 5")));
    CHECK(!is_irreducible(parse_poly("x^2 - 1")));
    CHECK(!is_irreducible(parse_poly("x^2 - 2x + 1")));
}

TEST_CASE("handles rational coefficients") {
    // 4 (x^2 - x - 1/4) has irrational roots but integer rescaling 4x^2-4x-1
    UniPoly p = parse_poly("x^2 - x - 1/4");
    Factorization f = factor_over_Q(p);
    CHECK(f.expand() == p);
    CHECK(is_irreducible(p));

    Factorization g = factor_over_Q(parse_poly("x^2 - 1/4"));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == parse_poly("x - 1/2"));
    CHECK(g.factors[1].first == parse_poly("x + 1/2"));
}

TEST_CASE("factor list ordering is deterministic") {
    Factorization f = factor_over_Q(parse_poly("x^4 - 5x^2 + 4"));
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].first == parse_poly("x - 2"));
    CHECK(f.factors[1].first == parse_poly("x - 1"));
    CHECK(f.factors[2].first == parse_poly("x + 1"));
    CHECK(f.factors[3].first == parse_poly("x + 2"));
}

TEST_CASE("square-free monic splitting") {
    auto fs = factor_squarefree_monic(parse_poly("x^3 - 2x^2 - x + 2"));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == parse_poly("x - 2"));
    CHECK(fs[1] == parse_poly("x - 1"));
    CHECK(fs[2] == parse_poly("x + 1"));
}

TEST_CASE("perfect squares") {
    CHECK(is_perfect_square(parse_poly("x^2")));
    CHECK(is_perfect_square(parse_poly("x^2 - 2x + 1")));
    CHECK(is_perfect_square(parse_poly("4x^2 - 4x + 1")));
    CHECK(is_perfect_square(UniPoly{1}));
    CHECK(!is_perfect_square(parse_poly("x^2 - 1")));
    CHECK(!is_perfect_square(parse_poly("x")));
    CHECK(!is_perfect_square(parse_poly("2x^2")));
}

} // TEST_SUITE
