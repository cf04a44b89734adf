#include "pgst/weightpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pgst {

namespace {
const UniPoly kZeroPoly = UniPoly::zero();
}

WeightPoly WeightPoly::from_x_poly(const UniPoly& p) {
    WeightPoly r;
    r.cx.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.cx.push_back(UniPoly::constant(c));
    r.trim();
    return r;
}

WeightPoly WeightPoly::w_symbol() {
    WeightPoly r;
    r.cx.push_back(UniPoly::x());
    return r;
}

WeightPoly WeightPoly::constant(const UniPoly& win) {
    WeightPoly r;
    r.cx.push_back(win);
    r.trim();
    return r;
}

int WeightPoly::degree_w() const {
    int d = -1;
    for (const auto& c : cx) d = std::max(d, c.degree());
    return d;
}

const UniPoly& WeightPoly::coeff_x(int k) const {
    if (k < 0 || k >= static_cast<int>(cx.size())) return kZeroPoly;
    return cx[static_cast<std::size_t>(k)];
}

void WeightPoly::trim() {
    while (!cx.empty() && cx.back().is_zero()) cx.pop_back();
}

WeightPoly WeightPoly::operator-() const {
    WeightPoly r = *this;
    for (auto& c : r.cx) c = -c;
    return r;
}

WeightPoly operator+(const WeightPoly& a, const WeightPoly& b) {
    WeightPoly r;
    r.cx.resize(std::max(a.cx.size(), b.cx.size()));
    for (std::size_t k = 0; k < a.cx.size(); ++k) r.cx[k] = r.cx[k] + a.cx[k];
    for (std::size_t k = 0; k < b.cx.size(); ++k) r.cx[k] = r.cx[k] + b.cx[k];
    r.trim();
    return r;
}

WeightPoly operator-(const WeightPoly& a, const WeightPoly& b) { return a + (-b); }

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    WeightPoly r;
    r.cx.resize(a.cx.size() + b.cx.size() - 1);
    for (std::size_t i = 0; i < a.cx.size(); ++i) {
        if (a.cx[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.cx.size(); ++j) r.cx[i + j] = r.cx[i + j] + a.cx[i] * b.cx[j];
    }
    r.trim();
    return r;
}

WeightPoly WeightPoly::divided_by_int(long k) const {
    WeightPoly r = *this;
    const Rational inv = make_rational(Int(1), Int(k));
    for (auto& c : r.cx) c = c.scaled(inv);
    return r;
}

UniPoly WeightPoly::specialize(const Rational& w0) const {
    std::vector<Rational> v(cx.size());
    for (std::size_t k = 0; k < cx.size(); ++k) v[k] = cx[k].eval(w0);
    return UniPoly(std::move(v));
}

std::string WeightPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree_x(); k >= 0; --k) {
        const UniPoly& c = coeff_x(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (c.degree() == 0 && k > 0) {
            if (!(c.coeff(0) == 1)) os << "(" << to_string(c.coeff(0)) << ")";
        } else if (k > 0 || c.degree() > 0) {
            os << "(" << c.str("w") << ")";
        } else {
            os << c.str("w");
        }
        if (k > 0) {
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

WeightPoly char_poly_w(const std::vector<std::vector<UniPoly>>& m) {
    const int n = static_cast<int>(m.size());
    WeightPoly out;
    out.cx.assign(static_cast<std::size_t>(n) + 1, UniPoly::zero());
    out.cx[static_cast<std::size_t>(n)] = UniPoly::constant(Rational(1));
    if (n == 0) {
        out.trim();
        return out;
    }

    std::vector<std::vector<UniPoly>> acc(m.size(), std::vector<UniPoly>(m.size()));
    for (int i = 0; i < n; ++i) acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = UniPoly::constant(Rational(1));

    std::vector<std::vector<UniPoly>> prod(m.size(), std::vector<UniPoly>(m.size()));
    for (int step = 1; step <= n; ++step) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                UniPoly s;
                for (int k = 0; k < n; ++k) {
                    const UniPoly& l = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                    const UniPoly& r = acc[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                    if (!l.is_zero() && !r.is_zero()) s = s + l * r;
                }
                prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
            }
        UniPoly tr;
        for (int i = 0; i < n; ++i) tr = tr + prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
        UniPoly ck = tr.scaled(make_rational(Int(-1), Int(step)));
        out.cx[static_cast<std::size_t>(n - step)] = ck;
        if (step < n) {
            acc = prod;
            for (int i = 0; i < n; ++i)
                acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                    acc[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] + ck;
        }
    }
    out.trim();
    return out;
}

} // namespace pgst
