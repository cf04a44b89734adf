#pragma once

#include "pgst/poly.hpp"

#include <vector>

namespace pgst {

// Polynomial in x whose coefficients are polynomials in the weight symbol w.
// cx[k] is the coefficient of x^k.
struct WeightPoly {
    std::vector<UniPoly> cx;

    static WeightPoly zero() { return {}; }
    static WeightPoly from_x_poly(const UniPoly& p);    // rational coefficients
    static WeightPoly w_symbol();                       // the weight itself
    static WeightPoly constant(const UniPoly& win);     // polynomial in w

    int degree_x() const { return static_cast<int>(cx.size()) - 1; }
    int degree_w() const;
    bool is_zero() const { return cx.empty(); }
    const UniPoly& coeff_x(int k) const;
    void trim();

    WeightPoly operator-() const;
    friend WeightPoly operator+(const WeightPoly& a, const WeightPoly& b);
    friend WeightPoly operator-(const WeightPoly& a, const WeightPoly& b);
    friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
    bool operator==(const WeightPoly& o) const { return cx == o.cx; }

    WeightPoly divided_by_int(long k) const;
    UniPoly specialize(const Rational& w0) const; // substitute a weight value
    std::string str() const;                      // coefficients in w, powers of x
};

// Characteristic polynomial of a square matrix with entries in Q[w].
WeightPoly char_poly_w(const std::vector<std::vector<UniPoly>>& m);

} // namespace pgst
