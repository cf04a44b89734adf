#include "pgst/poly.hpp"
#include "pgst/weightpoly.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace pgst;

TEST_SUITE("rational_poly") {

TEST_CASE("rationals reduce to lowest terms") {
    CHECK(make_rational(2, 4) == Rational(1) / 2);
    CHECK(make_rational(-6, 8) == Rational(-3) / 4);
    CHECK(make_rational(3, -9) == Rational(-1) / 3);
    CHECK_THROWS(make_rational(1, 0));
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-6/8") == Rational(-3) / 4);
    CHECK(to_string(parse_rational("3/7")) == "3/7");
    CHECK(to_string(Rational(-2)) == "-2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("integer helpers") {
    CHECK(is_integer(Rational(4)));
    CHECK(!is_integer(Rational(1) / 2));
    CHECK(floor_int(Rational(-3) / 2) == -2);
    CHECK(round_nearest(Rational(7) / 3) == 2);
    CHECK(gcd_int(12, 18) == 6);
    CHECK(lcm_int(4, 6) == 12);
}

TEST_CASE("poly construction and printing") {
    UniPoly p{-1, -1, 1}; // lowest degree first
    CHECK(p.degree() == 2);
    CHECK(p.str() == "x^2 - x - 1");
    CHECK(UniPoly{}.str() == "0");
    CHECK(UniPoly{5}.str() == "5");
    CHECK(UniPoly::x().str() == "x");
    CHECK(UniPoly({2, 0, 0, -1}).str() == "-x^3 + 2");
    CHECK(parse_poly("x^2 - x - 1") == p);
    CHECK(parse_poly("-x^3 + 2") == UniPoly({2, 0, 0, -1}));
    CHECK(parse_poly("x^2 - 1/4x + 3/2").coeff(1) == Rational(-1) / 4);
}

TEST_CASE("poly arithmetic") {
    UniPoly a = parse_poly("x - 1"), b = parse_poly("x + 1");
    CHECK(a * b == parse_poly("x^2 - 1"));
    CHECK(a + b == parse_poly("2x"));
    CHECK(b - a == UniPoly{2});
    CHECK((-a) == parse_poly("-x + 1"));
    CHECK(poly_pow(a, 3) == parse_poly("x^3 - 3x^2 + 3x - 1"));
    CHECK(a.eval(5) == 4);
    CHECK(parse_poly("x^3 - 3x").derivative() == parse_poly("3x^2 - 3"));
    CHECK(parse_poly("2x^2 - 4").monic() == parse_poly("x^2 - 2"));
    CHECK(parse_poly("x^2 - 2").compose_scale(2) == parse_poly("4x^2 - 2"));
    CHECK(parse_poly("x + 1").shift_degree(2) == parse_poly("x^3 + x^2"));
}

TEST_CASE("poly division") {
    UniPoly num = parse_poly("x^3 - 2x + 5"), den = parse_poly("x - 1");
    auto [q, r] = UniPoly::divmod(num, den);
    CHECK(q * den + r == num);
    CHECK(r.degree() < 1);
    CHECK(UniPoly::divide_exact(parse_poly("x^2 - 1"), den) == parse_poly("x + 1"));
    CHECK_THROWS(UniPoly::divide_exact(num, den));
    CHECK(divides(den, parse_poly("x^2 - 1")));
    CHECK(!divides(den, num));
}

TEST_CASE("gcd, trace, square-free parts") {
    UniPoly g = poly_gcd(parse_poly("x^3 + 2x^2 - x - 2"), parse_poly("x^2 + 3x + 2"));
    CHECK(g == parse_poly("x^2 + 3x + 2")); // (x+1)(x+2), monic
    CHECK(trace_of(parse_poly("x^3 - 3x^2 + 2")) == 3);
    CHECK(trace_of(parse_poly("2x^2 - 3x + 1")) == Rational(3) / 2);

    auto parts = squarefree_decomposition(parse_poly("x^3 - 3x + 2")); // (x-1)^2 (x+2)
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<UniPoly, int>{parse_poly("x + 2"), 1});
    CHECK(parts[1] == std::pair<UniPoly, int>{parse_poly("x - 1"), 2});
}

TEST_CASE("integer form splits content and primitive part") {
    IntegerForm f = integer_form(parse_poly("1/2x - 1/3"));
    CHECK(f.content == Rational(1) / 6);
    CHECK(f.coeffs == std::vector<Int>{-2, 3});
    CHECK(poly_from_int_coeffs({-2, 3}) == parse_poly("3x - 2"));
}

TEST_CASE("weight polynomials") {
    WeightPoly w = WeightPoly::w_symbol();
    WeightPoly x = WeightPoly::from_x_poly(UniPoly::x());
    WeightPoly prod = (x + w) * (x - w);
    CHECK(prod.degree_x() == 2);
    CHECK(prod.degree_w() == 2);
    CHECK(prod == x * x - w * w);
    CHECK(prod.specialize(Rational(2) / 3) == parse_poly("x^2 - 4/9"));
    CHECK(prod.str() == "x^2 + (-w^2)");
    CHECK((w * w * x).coeff_x(1) == parse_poly("w^2", "w"));

    // arithmetic commutes with specialization
    WeightPoly a = x * x + w * x - w * w;
    WeightPoly b = x - w * w;
    Rational w0 = Rational(5) / 7;
    CHECK((a * b).specialize(w0) == a.specialize(w0) * b.specialize(w0));
    CHECK((a + b).specialize(w0) == a.specialize(w0) + b.specialize(w0));
}

TEST_CASE("symbolic char poly matches scalar one after specialization") {
    std::vector<std::vector<UniPoly>> m = {
        {UniPoly{0}, parse_poly("w", "w")},
        {parse_poly("w", "w"), UniPoly{0}},
    };
    WeightPoly phi = char_poly_w(m);
    CHECK(phi.specialize(3) == parse_poly("x^2 - 9"));
}

} // TEST_SUITE
