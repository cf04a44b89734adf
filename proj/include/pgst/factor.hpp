#pragma once

#include "pgst/poly.hpp"

#include <vector>

namespace pgst {

// p = unit * prod(factors[i].first ^ factors[i].second), factors monic
// irreducible over Q, sorted by degree then coefficient order.
struct Factorization {
    Rational unit;
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly expand() const;
};

Factorization factor_over_Q(const UniPoly& p);

// Monic irreducible factors of a square-free monic polynomial, sorted.
std::vector<UniPoly> factor_squarefree_monic(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

// True when p is a square in Q[x] (unit included).
bool is_perfect_square(const UniPoly& p);

} // namespace pgst
