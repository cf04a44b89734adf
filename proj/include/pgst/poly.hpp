#pragma once

#include "pgst/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pgst {

// Dense univariate polynomial over Q, coefficients stored lowest degree first.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<long> coeffs); // lowest degree first

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& v);
    static UniPoly x();
    static UniPoly monomial(int k, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    UniPoly monic() const;
    Rational eval(const Rational& v) const;
    UniPoly derivative() const;
    UniPoly scaled(const Rational& s) const;        // s * p(x)
    UniPoly compose_scale(const Rational& s) const; // p(s * x)
    UniPoly shift_degree(int k) const;              // x^k * p(x)

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // Exact division; throws if the remainder is nonzero.
    static UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

    std::string str(const std::string& var = "x") const;

private:
    std::vector<Rational> c_;
    void trim();
};

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b); // monic, or zero if both zero
UniPoly poly_pow(const UniPoly& base, int e);
bool divides(const UniPoly& d, const UniPoly& p);

// Sum of roots with multiplicity: -c[n-1]/c[n] for degree n >= 1.
Rational trace_of(const UniPoly& p);

// Yun decomposition: list of (monic square-free part, multiplicity),
// multiplicities strictly increasing, parts pairwise coprime.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

// p = content * primitive with primitive an integer polynomial, positive
// leading coefficient, coefficient gcd 1.
struct IntegerForm {
    Rational content;
    std::vector<Int> coeffs; // lowest degree first
};
IntegerForm integer_form(const UniPoly& p);
UniPoly poly_from_int_coeffs(const std::vector<Int>& coeffs);

// Parses "x^4 - 3x^3 + 4x - 1" style text (integer or p/q coefficients).
UniPoly parse_poly(const std::string& text, const std::string& var = "x");

// Ordering used everywhere factor lists need a deterministic sequence:
// by degree, then coefficient lists compared from the top coefficient down.
bool poly_order_less(const UniPoly& a, const UniPoly& b);

} // namespace pgst
