#pragma once

#include "pgst/poly.hpp"

#include <boost/multiprecision/mpfr.hpp>
#include <vector>

namespace pgst {

using Real = boost::multiprecision::mpfr_float;

// All real roots of a square-free polynomial, ascending, accurate to about
// 10^-digits.  Sturm isolation with exact rational endpoints, then Newton.
std::vector<Real> real_roots_sorted(const UniPoly& squarefree, int digits);

Real to_real(const Rational& r);

} // namespace pgst
