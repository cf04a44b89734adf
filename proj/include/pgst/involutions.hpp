#pragma once

#include "pgst/graph.hpp"
#include "pgst/weightpoly.hpp"

#include <vector>

namespace pgst {

// Order-2 weight-preserving automorphism.  reps holds the lower vertex of
// each swapped pair ascending; fixed holds the fixed vertices ascending.
// Quotient blocks are laid out reps first, fixed last.
struct Involution {
    std::vector<int> sigma;
    std::vector<int> reps;
    std::vector<int> fixed;
};

// All involutions in lexicographic sigma order; brute backtracking pruned by
// (degree, incident weight multiset, loop weight) signatures.
std::vector<Involution> find_involutions(const Graph& g);

Involution make_involution(const Graph& g, const std::vector<int>& sigma); // validates

struct QuotientPair {
    RationalMatrix a_plus;  // [[A' + A_sigma, A_delta], [2 A_delta^T, A_S]] -- not symmetric
    RationalMatrix a_minus; // A' - A_sigma
    UniPoly pi_plus;
    UniPoly pi_minus;
};

QuotientPair quotient_pair(const Graph& g, const Involution& inv);

// Same quotients with one edge orbit carrying the symbolic weight w.  The
// base graph must not contain the designated edge; it and its mirror image
// under sigma are added with weight w.
struct SymbolicQuotients {
    WeightPoly pi_plus;
    WeightPoly pi_minus;
};
SymbolicQuotients symbolic_quotient_pair(const Graph& g, const Involution& inv, int u, int v);

// Pi = g * (p - w^2 q) with gcd(p, q) = 1; flags report the lemma's
// perfect-square branch.
struct WeightDecomposition {
    UniPoly g, p, q;
    bool p_square = false;
    bool q_square = false;
};
WeightDecomposition weighted_edge_decomposition(const WeightPoly& side);

// For quotients linear in w (a fixed edge orbit) the split happens at the
// product level: Pi+ * Pi- is quadratic in w.
WeightDecomposition product_weight_decomposition(const SymbolicQuotients& q);

// Convenience wrapper: symbolic quotients plus the decomposition of each
// side, falling back to the product split when the sides are linear in w.
struct EdgeDecomposition {
    SymbolicQuotients quotients;
    bool per_side = true; // false -> plus holds the product decomposition
    WeightDecomposition plus;
    WeightDecomposition minus;
};
EdgeDecomposition weighted_edge_decomposition(const Graph& g, const Involution& inv, int u, int v);

} // namespace pgst
