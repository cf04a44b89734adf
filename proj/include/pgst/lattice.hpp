#pragma once

#include "pgst/factor.hpp"
#include "pgst/spectra.hpp"

#include <optional>
#include <vector>

namespace pgst {

// Integer combination sum(ell_i * lambda_i) + sum(m_j * mu_j) = 0 over the
// eigenvalue supports of P+ (lambda) and P- (mu), with sum(ell) + sum(m) = 0.
// Roots are listed ascending per side.  exact_verified is set when the
// coefficients are constant on each irreducible factor's root block, which
// lets the relation be checked with traces and degrees alone.
struct IntegerRelation {
    std::vector<long long> ell;
    std::vector<long long> m;
    double residual = 0.0;
    bool sum_m_odd = false;
    bool exact_verified = false;
};

// Exact-arithmetic LLL reduction (delta = 99/100) of the rows of basis.
void lll_reduce(std::vector<std::vector<Int>>& basis);

std::optional<IntegerRelation> heuristic_relation_search(const RelativeMinPolyPair& pair,
                                                         int precision_digits,
                                                         long long coeff_bound);

// Trace/degree check for relations that are constant per irreducible factor.
bool verify_relation_exact(const RelativeMinPolyPair& pair, const IntegerRelation& rel);

} // namespace pgst
