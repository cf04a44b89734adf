#include "pgst/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgst {

namespace {

int sign_of(const Rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (chain.back().degree() >= 0 && !chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        if (b.degree() == 0) break;
        UniPoly r = -UniPoly::divmod(a, b).second;
        if (r.is_zero()) break; // square-free input should not reach here
        Rational lead = r.leading();
        if (lead < 0) lead = -lead;
        chain.push_back(r.scaled(Rational(1) / lead)); // positive scaling keeps signs
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int var = 0, prev = 0;
    for (const auto& s : chain) {
        int sg = sign_of(s.eval(x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++var;
        prev = sg;
    }
    return var;
}

struct PrecisionGuard {
    unsigned old;
    explicit PrecisionGuard(unsigned digits) : old(Real::default_precision()) {
        Real::default_precision(digits);
    }
    ~PrecisionGuard() { Real::default_precision(old); }
};

Real eval_real(const UniPoly& p, const Real& x) {
    Real acc(0);
    for (int k = p.degree(); k >= 0; --k) acc = acc * x + to_real(p.coeff(k));
    return acc;
}

} // namespace

Real to_real(const Rational& r) {
    return Real(numerator(r).str()) / Real(denominator(r).str());
}

std::vector<Real> real_roots_sorted(const UniPoly& squarefree, int digits) {
    if (digits < 10) digits = 10;
    PrecisionGuard guard(static_cast<unsigned>(digits) + 30);

    const UniPoly p = squarefree.monic();
    std::vector<Real> out;
    if (p.degree() <= 0) return out;
    if (p.degree() == 1) {
        out.push_back(to_real(-p.coeff(0)));
        return out;
    }

    Rational bound(1);
    for (int k = 0; k < p.degree(); ++k) {
        Rational m = p.coeff(k);
        if (m < 0) m = -m;
        if (m > bound) bound = m;
    }
    bound += 1;

    auto chain = sturm_chain(p);
    auto count_in = [&](const Rational& a, const Rational& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    };

    // isolate: intervals (a, b] each holding exactly one root
    std::vector<std::pair<Rational, Rational>> isolated;
    std::vector<std::tuple<Rational, Rational, int>> work;
    int total = count_in(-bound, bound);
    if (total > 0) work.emplace_back(-bound, bound, total);
    while (!work.empty()) {
        auto [a, b, cnt] = work.back();
        work.pop_back();
        if (cnt == 1) {
            isolated.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        for (int j = 1; p.eval(mid) == 0; ++j) // dodge exact hits on the split point
            mid = a + (b - a) * make_rational(Int(j), Int(p.degree() + 2));
        int left = count_in(a, mid);
        if (left > 0) work.emplace_back(a, mid, left);
        if (cnt - left > 0) work.emplace_back(mid, b, cnt - left);
    }
    std::sort(isolated.begin(), isolated.end());

    const UniPoly dp = p.derivative();
    Real tol = boost::multiprecision::pow(Real(10), -(digits + 5));
    for (auto& [a0, b0] : isolated) {
        Rational a = a0, b = b0;
        int sa = sign_of(p.eval(a));
        if (sa == 0) { // endpoint is the root itself
            out.push_back(to_real(a));
            continue;
        }
        for (int it = 0; it < 40 && b - a > make_rational(Int(1), Int(1) << 30); ++it) {
            Rational mid = (a + b) / 2;
            int sm = sign_of(p.eval(mid));
            if (sm == 0) {
                a = b = mid;
                break;
            }
            if (sm == sa) a = mid; else b = mid;
        }
        if (a == b) {
            out.push_back(to_real(a));
            continue;
        }
        Real x = (to_real(a) + to_real(b)) / 2;
        Real lo = to_real(a), hi = to_real(b);
        for (int it = 0; it < 500; ++it) {
            Real f = eval_real(p, x);
            Real d = eval_real(dp, x);
            Real step = (d == 0) ? Real((hi - lo) / 4) : Real(f / d);
            Real nx = x - step;
            if (nx < lo || nx > hi) nx = (lo + hi) / 2; // fall back toward the bracket
            if (eval_real(p, nx) * Real(sa) > 0) lo = nx; else hi = nx;
            Real delta = boost::multiprecision::abs(nx - x);
            x = nx;
            if (delta < tol) break;
        }
        out.push_back(x);
    }
    return out;
}

} // namespace pgst
