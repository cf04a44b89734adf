#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace pgst {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// mpq arithmetic assumes canonical operands, but construction from strings or
// raw num/den pairs does not reduce.  All parsing goes through these helpers.
Rational make_rational(const Int& num, const Int& den);
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

Int numerator(const Rational& r);
Int denominator(const Rational& r);

bool is_integer(const Rational& r);
Int floor_int(const Rational& r);
Int round_nearest(const Rational& r);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

std::size_t bit_size(const Rational& r);

} // namespace pgst
