#include "pgst/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pgst {

namespace {
const Rational kZero = Rational(0);
}

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

UniPoly UniPoly::constant(const Rational& v) {
    return UniPoly(std::vector<Rational>{v});
}

UniPoly UniPoly::x() { return monomial(1, Rational(1)); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::logic_error("poly: leading coefficient of zero");
    return c_.back();
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

Rational UniPoly::eval(const Rational& v) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& e : v) e *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose_scale(const Rational& s) const {
    std::vector<Rational> v(c_);
    Rational pw(1);
    for (std::size_t k = 1; k < v.size(); ++k) {
        pw *= s;
        v[k] *= pw;
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::shift_degree(int k) const {
    if (is_zero()) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const { return scaled(Rational(-1)); }

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("poly: division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem(a.c_);
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational inv_lead = Rational(1) / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::divide_exact(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("poly: inexact division");
    return q;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = UniPoly::divmod(f, g).second;
        f = std::move(g);
        g = r.monic(); // keep coefficients small
    }
    return f.monic();
}

UniPoly poly_pow(const UniPoly& base, int e) {
    UniPoly acc = UniPoly::constant(Rational(1));
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

bool divides(const UniPoly& d, const UniPoly& p) {
    if (d.is_zero()) return p.is_zero();
    return UniPoly::divmod(p, d).second.is_zero();
}

Rational trace_of(const UniPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("poly: trace needs degree >= 1");
    return -p.coeff(p.degree() - 1) / p.leading();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() < 1) return out;
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly g = poly_gcd(f, fp);
    UniPoly b = UniPoly::divide_exact(f, g);
    UniPoly d = UniPoly::divide_exact(fp, g) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = UniPoly::divide_exact(b, a);
        UniPoly c = UniPoly::divide_exact(d, a);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntegerForm integer_form(const UniPoly& p) {
    if (p.is_zero()) return {Rational(0), {}};
    Int den(1);
    for (const auto& c : p.coeffs()) den = lcm_int(den, denominator(c));
    std::vector<Int> ints(p.coeffs().size());
    Int g(0);
    for (std::size_t k = 0; k < ints.size(); ++k) {
        ints[k] = numerator(p.coeffs()[k] * Rational(den));
        g = gcd_int(g, ints[k]);
    }
    if (ints.back() < 0) g = -g;
    for (auto& v : ints) v /= g;
    return {make_rational(g, den), std::move(ints)};
}

UniPoly poly_from_int_coeffs(const std::vector<Int>& coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << to_string(mag);
        } else {
            if (mag != 1) os << to_string(mag);
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

UniPoly parse_poly(const std::string& text, const std::string& var) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("poly: empty text");
    auto bad = [&] { return std::invalid_argument("poly: cannot parse '" + text + "'"); };

    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        if (pos >= s.size()) throw bad();
        std::string num;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            num.push_back(s[pos++]);
        if (pos < s.size() && s[pos] == '*') ++pos;
        Rational c = num.empty() ? Rational(1) : parse_rational(num);
        int exp = 0;
        if (s.compare(pos, var.size(), var) == 0) {
            pos += var.size();
            exp = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string e;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    e.push_back(s[pos++]);
                if (e.empty()) throw bad();
                exp = std::stoi(e);
            }
        } else if (num.empty()) {
            throw bad();
        }
        if (exp >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(exp) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(exp)] += Rational(sign) * c;
    }
    return UniPoly(std::move(coeffs));
}

bool poly_order_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k) {
        if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    }
    return false;
}

} // namespace pgst
