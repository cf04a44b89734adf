#include "pgst/rational.hpp"

#include <stdexcept>

namespace pgst {

namespace mp = boost::multiprecision;

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    mpq_canonicalize(r.backend().data());
    return r;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("rational: cannot parse '" + text + "'"); };
    std::string s = text;
    s.erase(0, s.find_first_not_of(" \t"));
    if (!s.empty()) s.erase(s.find_last_not_of(" \t") + 1);
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw bad();
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string to_string(const Rational& r) {
    return r.str();
}

Int numerator(const Rational& r) { return Int(mp::numerator(r)); }
Int denominator(const Rational& r) { return Int(mp::denominator(r)); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Int floor_int(const Rational& r) {
    Int q, rem;
    mp::divide_qr(numerator(r), denominator(r), q, rem);
    if (rem != 0 && r < 0) --q;
    return q;
}

Int round_nearest(const Rational& r) {
    return floor_int(r + make_rational(1, 2));
}

Int gcd_int(const Int& a, const Int& b) { return mp::gcd(a, b); }
Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return mp::abs(a / gcd_int(a, b) * b);
}

std::size_t bit_size(const Rational& r) {
    return mpz_sizeinbase(numerator(r).backend().data(), 2) +
           mpz_sizeinbase(denominator(r).backend().data(), 2);
}

} // namespace pgst
