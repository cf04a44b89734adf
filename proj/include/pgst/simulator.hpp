#pragma once

#include "pgst/matrix.hpp"

#include <utility>
#include <vector>

namespace pgst {

// Double-precision eigendecomposition of a symmetric matrix via cyclic
// Jacobi rotations.  vectors[k] is the unit eigenvector for values[k].
struct NumericSpectrum {
    std::vector<double> values; // ascending
    std::vector<std::vector<double>> vectors;
    double residual = 0.0; // max entry of |A v - lambda v| over all pairs
};

NumericSpectrum numeric_eigen(const RationalMatrix& a);

// |U(t)_{x,y}| with U(t) = exp(itA), from the eigendecomposition.
double fidelity_at(const NumericSpectrum& spec, int x, int y, double t);

// |sum_z |U(t)_{x,z}|^2 - 1|; zero up to rounding.
double unitarity_defect(const NumericSpectrum& spec, int x, double t);

// Coarse grid scan of |U(t)_{x,y}| over [0, t_max] followed by golden-section
// refinement around the best local maxima.  Evidence at the horizon only:
// a supremum over unbounded time cannot be certified numerically.
struct FidelityTrace {
    int x = 0, y = 0;
    double t_max = 0.0;
    std::vector<std::pair<double, double>> samples; // downsampled (t, fidelity)
    double best_t = 0.0;
    double best_fidelity = 0.0;
};

FidelityTrace search_max_fidelity(const NumericSpectrum& spec, int x, int y, double t_max,
                                  long grid = 1000000, bool refine = true);

// Projection test for strong cospectrality: group eigenvalues within
// group_tol, and require E_xx = E_yy and |E_xy| = E_xx per group within
// proj_tol.  Cross-validates the exact gcd verdict.
bool strong_cospectral_numeric(const NumericSpectrum& spec, int x, int y,
                               double group_tol = 1e-8, double proj_tol = 1e-4);

} // namespace pgst
