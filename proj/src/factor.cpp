#include "pgst/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace pgst {

namespace {

// ---------- arithmetic mod a small prime ----------

using Zp = std::vector<std::int64_t>; // lowest degree first, entries in [0, p)

void zp_trim(Zp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t modpow_i(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::int64_t modinv(std::int64_t a, std::int64_t p) { return modpow_i(a, p - 2, p); }

Zp zp_mul(const Zp& a, const Zp& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Zp r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

Zp zp_sub(const Zp& a, const Zp& b, std::int64_t p) {
    Zp r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] % p + p) % p;
    zp_trim(r);
    return r;
}

// remainder of a by b (b nonzero)
Zp zp_mod(Zp a, const Zp& b, std::int64_t p) {
    const std::int64_t inv = modinv(b.back(), p);
    while (a.size() >= b.size()) {
        std::int64_t q = a.back() * inv % p;
        if (q != 0) {
            std::size_t off = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[off + j] = (a[off + j] - q * b[j] % p + p) % p;
        }
        a.pop_back();
        zp_trim(a);
        if (a.size() < b.size()) break;
    }
    return a;
}

Zp zp_divide(Zp a, const Zp& b, std::int64_t p) {
    const std::int64_t inv = modinv(b.back(), p);
    if (a.size() < b.size()) return {};
    Zp q(a.size() - b.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        if (a.size() < b.size() + k) continue;
        if (a.size() != b.size() + k) continue;
        std::int64_t c = a.back() * inv % p;
        q[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[k + j] = (a[k + j] - c * b[j] % p + p) % p;
        zp_trim(a);
    }
    return q;
}

Zp zp_monic(Zp a, std::int64_t p) {
    if (a.empty()) return a;
    std::int64_t inv = modinv(a.back(), p);
    for (auto& c : a) c = c * inv % p;
    return a;
}

Zp zp_gcd(Zp a, Zp b, std::int64_t p) {
    while (!b.empty()) {
        Zp r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

Zp zp_derivative(const Zp& a, std::int64_t p) {
    if (a.size() < 2) return {};
    Zp r(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) r[k - 1] = a[k] * static_cast<std::int64_t>(k % p) % p;
    zp_trim(r);
    return r;
}

Zp zp_powmod(Zp base, Int e, const Zp& f, std::int64_t p) {
    Zp r = {1};
    base = zp_mod(std::move(base), f, p);
    while (e > 0) {
        if ((e & 1) != 0) r = zp_mod(zp_mul(r, base, p), f, p);
        base = zp_mod(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

// s*g + t*h = 1 in Zp[x] for coprime g, h
void zp_bezout(const Zp& g, const Zp& h, std::int64_t p, Zp& s, Zp& t) {
    Zp r0 = g, r1 = h;
    Zp s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
        Zp q = zp_divide(r0, r1, p);
        Zp r2 = zp_sub(r0, zp_mul(q, r1, p), p);
        Zp s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        Zp t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1) throw std::logic_error("factor: bezout on non-coprime inputs");
    std::int64_t inv = modinv(r0[0], p);
    for (auto& c : s0) c = c * inv % p;
    for (auto& c : t0) c = c * inv % p;
    s = std::move(s0);
    t = std::move(t0);
}

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

bool is_prime_small(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------- factorization mod p (distinct degree + equal degree split) ----------

void equal_degree_split(const Zp& f, int d, std::int64_t p, SplitMix64& rng, std::vector<Zp>& out) {
    if (static_cast<int>(f.size()) - 1 == d) {
        out.push_back(f);
        return;
    }
    const Int half = (boost::multiprecision::pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        Zp a(f.size() - 1);
        for (auto& c : a) c = static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(p));
        zp_trim(a);
        if (a.size() < 2) continue;
        Zp b = zp_powmod(a, half, f, p);
        b = zp_sub(b, Zp{1}, p);
        Zp c = zp_gcd(b, f, p);
        if (!c.empty() && c.size() > 1 && c.size() < f.size()) {
            equal_degree_split(c, d, p, rng, out);
            equal_degree_split(zp_divide(f, c, p), d, p, rng, out);
            return;
        }
    }
}

std::vector<Zp> factor_mod_p(Zp f, std::int64_t p, SplitMix64& rng) {
    std::vector<Zp> out;
    f = zp_monic(std::move(f), p);
    Zp h = {0, 1}; // x
    int d = 0;
    while (static_cast<int>(f.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(f.size()) - 1) {
            out.push_back(f);
            break;
        }
        h = zp_powmod(std::move(h), Int(p), f, p);
        Zp hx = zp_sub(h, Zp{0, 1}, p);
        Zp g = zp_gcd(hx, f, p);
        if (g.size() > 1) {
            equal_degree_split(g, d, p, rng, out);
            f = zp_divide(f, g, p);
            h = zp_mod(std::move(h), f, p);
        }
    }
    return out;
}

// ---------- lifting mod p^(2^j) ----------

using ZM = std::vector<Int>; // coefficients reduced to the symmetric range mod M

Int sym(Int v, const Int& m) {
    v %= m;
    if (v < 0) v += m;
    if (v * 2 > m) v -= m;
    return v;
}

void zm_trim(ZM& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZM zm_reduce(ZM a, const Int& m) {
    for (auto& c : a) c = sym(c, m);
    zm_trim(a);
    return a;
}

ZM zm_mul(const ZM& a, const ZM& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZM r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(r), m);
}

ZM zm_add(const ZM& a, const ZM& b, const Int& m) {
    ZM r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zm_reduce(std::move(r), m);
}

ZM zm_sub(const ZM& a, const ZM& b, const Int& m) {
    ZM r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zm_reduce(std::move(r), m);
}

// division by a monic divisor, coefficients mod m
void zm_divmod_monic(ZM a, const ZM& b, const Int& m, ZM& q, ZM& r) {
    if (a.size() < b.size()) {
        q = {};
        r = zm_reduce(std::move(a), m);
        return;
    }
    q.assign(a.size() - b.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (a.size() == b.size() + k) {
            Int c = a.back();
            q[k] = c;
            if (c != 0)
                for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sym(a[k + j] - c * b[j], m);
            a.pop_back();
            zm_trim(a);
        }
    }
    q = zm_reduce(std::move(q), m);
    r = std::move(a);
}

struct LiftPair {
    ZM g, h, s, t;
};

// one quadratic step: from a factorization mod m to one mod m*m
LiftPair hensel_step(const ZM& f, const LiftPair& in, const Int& m) {
    const Int m2 = m * m;
    ZM e = zm_sub(f, zm_mul(in.g, in.h, m2), m2);
    ZM q, r;
    zm_divmod_monic(zm_mul(in.s, e, m2), in.h, m2, q, r);
    ZM g = zm_add(in.g, zm_add(zm_mul(in.t, e, m2), zm_mul(q, in.g, m2), m2), m2);
    ZM h = zm_add(in.h, r, m2);
    ZM b = zm_sub(zm_add(zm_mul(in.s, g, m2), zm_mul(in.t, h, m2), m2), ZM{Int(1)}, m2);
    ZM c, d;
    zm_divmod_monic(zm_mul(in.s, b, m2), h, m2, c, d);
    ZM s = zm_sub(in.s, d, m2);
    ZM t = zm_sub(in.t, zm_add(zm_mul(in.t, b, m2), zm_mul(c, g, m2), m2), m2);
    return {std::move(g), std::move(h), std::move(s), std::move(t)};
}

ZM zm_from_zp(const Zp& a, const Int& m) {
    ZM r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = sym(Int(a[i]), m);
    return r;
}

// lifts the mod-p factor list of f (monic) to factors mod M = p^(2^levels)
std::vector<ZM> lift_tree(const ZM& f, const std::vector<Zp>& parts, std::size_t lo, std::size_t hi,
                          std::int64_t p, const Int& M) {
    if (hi - lo == 1) return {zm_reduce(f, M)};
    std::size_t mid = lo + (hi - lo) / 2;
    Zp g0 = {1}, h0 = {1};
    for (std::size_t i = lo; i < mid; ++i) g0 = zp_mul(g0, parts[i], p);
    for (std::size_t i = mid; i < hi; ++i) h0 = zp_mul(h0, parts[i], p);
    Zp s0, t0;
    zp_bezout(g0, h0, p, s0, t0);
    Int m(p);
    LiftPair cur{zm_from_zp(g0, m), zm_from_zp(h0, m), zm_from_zp(s0, m), zm_from_zp(t0, m)};
    while (m < M) {
        cur = hensel_step(zm_reduce(f, m * m), cur, m);
        m *= m;
    }
    auto left = lift_tree(cur.g, parts, lo, mid, p, M);
    auto right = lift_tree(cur.h, parts, mid, hi, p, M);
    left.insert(left.end(), right.begin(), right.end());
    return left;
}

// ---------- recombination ----------

std::uint64_t poly_hash(const std::vector<Int>& v) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& c : v) {
        std::uint64_t x = static_cast<std::uint64_t>(c.convert_to<long long>() & 0x7fffffffffffffffLL);
        h = (h ^ x) * 1099511628211ULL;
    }
    return h;
}

Int max_abs_coeff(const std::vector<Int>& v) {
    Int m(0);
    for (const auto& c : v) m = std::max(m, Int(boost::multiprecision::abs(c)));
    return m;
}

bool int_divides_poly(const std::vector<Int>& divisor, std::vector<Int> target) {
    // both monic; synthetic division over Z
    if (divisor.size() > target.size()) return false;
    while (target.size() >= divisor.size()) {
        Int c = target.back();
        std::size_t off = target.size() - divisor.size();
        for (std::size_t j = 0; j < divisor.size(); ++j) target[off + j] -= c * divisor[j];
        while (!target.empty() && target.back() == 0) target.pop_back();
        if (target.size() < divisor.size()) break;
    }
    return target.empty();
}

std::vector<Int> int_divide_poly(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> rem = a, q(a.size() - b.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        if (rem.size() == b.size() + k) {
            Int c = rem.back();
            q[k] = c;
            for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
    }
    return q;
}

// square-free monic integer polynomial -> monic integer irreducible factors
std::vector<std::vector<Int>> zassenhaus(std::vector<Int> T) {
    std::vector<std::vector<Int>> out;
    if (T.size() <= 2) {
        if (T.size() == 2) out.push_back(T);
        return out;
    }
    // root at zero splits off directly (square-free, so multiplicity one)
    if (T.front() == 0) {
        out.push_back({Int(0), Int(1)});
        T.erase(T.begin());
        auto rest = zassenhaus(std::move(T));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    const int n = static_cast<int>(T.size()) - 1;
    std::int64_t p = 0;
    Zp fp;
    for (std::int64_t cand = 3;; cand += 2) {
        if (!is_prime_small(cand)) continue;
        Zp f(T.size());
        for (std::size_t i = 0; i < T.size(); ++i) {
            Int c = T[i] % cand;
            if (c < 0) c += cand;
            f[i] = c.convert_to<std::int64_t>();
        }
        zp_trim(f);
        if (static_cast<int>(f.size()) - 1 != n) continue; // should not happen, monic
        if (zp_gcd(f, zp_derivative(f, cand), cand).size() == 1) {
            p = cand;
            fp = std::move(f);
            break;
        }
    }

    SplitMix64 rng{poly_hash(T) ^ static_cast<std::uint64_t>(p)};
    std::vector<Zp> parts = factor_mod_p(fp, p, rng);
    std::sort(parts.begin(), parts.end(), [](const Zp& a, const Zp& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    if (parts.size() == 1) {
        out.push_back(std::move(T));
        return out;
    }

    // factor coefficient bound (Mignotte-style, generous)
    Int norm2(0);
    for (const auto& c : T) norm2 += c * c;
    Int bound = (boost::multiprecision::sqrt(norm2) + 1 + max_abs_coeff(T)) << static_cast<unsigned>(n + 1);
    Int M(p);
    while (M < 2 * bound) M *= M;

    ZM f_zm(T.size());
    for (std::size_t i = 0; i < T.size(); ++i) f_zm[i] = sym(T[i], M);
    std::vector<ZM> lifted = lift_tree(f_zm, parts, 0, parts.size(), p, M);

    // subset recombination against the shrinking target
    std::vector<Int> cur = T;
    std::vector<ZM> pool = std::move(lifted);
    std::size_t budget = 1u << 22;
    for (std::size_t take = 1; pool.size() >= 2 * take;) {
        bool found = false;
        std::vector<std::size_t> idx(take);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            if (budget-- == 0) throw std::runtime_error("factor: recombination budget exhausted");
            int deg = 0;
            for (std::size_t i : idx) deg += static_cast<int>(pool[i].size()) - 1;
            if (2 * deg <= static_cast<int>(cur.size()) - 1) {
                ZM prod = {Int(1)};
                for (std::size_t i : idx) prod = zm_mul(prod, pool[i], M);
                std::vector<Int> cand(prod.begin(), prod.end());
                if (!cand.empty() && cur.front() % cand.front() == 0 && int_divides_poly(cand, cur)) {
                    out.push_back(cand);
                    cur = int_divide_poly(cur, cand);
                    for (std::size_t i = idx.size(); i-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[i]));
                    found = true;
                    break;
                }
            }
            // next lexicographic combination
            std::size_t i = take;
            while (i-- > 0) {
                if (idx[i] != i + pool.size() - take) {
                    ++idx[i];
                    for (std::size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = take + 1; // exhausted marker
                    break;
                }
            }
            if (i == take + 1) break;
        }
        if (!found) ++take;
    }
    if (cur.size() > 1) out.push_back(std::move(cur));
    return out;
}

} // namespace

UniPoly Factorization::expand() const {
    UniPoly acc = UniPoly::constant(unit);
    for (const auto& [f, m] : factors) acc = acc * poly_pow(f, m);
    return acc;
}

std::vector<UniPoly> factor_squarefree_monic(const UniPoly& p) {
    if (p.degree() < 1) return {};
    if (!p.is_monic()) throw std::invalid_argument("factor: expected monic input");
    if (p.degree() == 1) return {p};

    // clear denominators through a root scaling so the integer problem is monic
    Int d(1);
    for (const auto& c : p.coeffs()) d = lcm_int(d, denominator(c));
    UniPoly T = p.compose_scale(make_rational(1, d)).scaled(Rational(boost::multiprecision::pow(d, static_cast<unsigned>(p.degree()))));
    std::vector<Int> tc(T.coeffs().size());
    for (std::size_t i = 0; i < tc.size(); ++i) tc[i] = numerator(T.coeffs()[i]);

    std::vector<UniPoly> out;
    for (const auto& fac : zassenhaus(tc)) {
        UniPoly g = poly_from_int_coeffs(fac);
        out.push_back(g.compose_scale(Rational(d)).monic());
    }
    std::sort(out.begin(), out.end(), poly_order_less);
    return out;
}

Factorization factor_over_Q(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization out;
    out.unit = p.leading();
    for (const auto& [part, mult] : squarefree_decomposition(p.monic())) {
        for (const auto& f : factor_squarefree_monic(part)) out.factors.emplace_back(f, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_order_less(a.first, b.first); });
    if (!(out.expand() == p)) throw std::logic_error("factor: self-check failed");
    return out;
}

bool is_irreducible(const UniPoly& p) {
    if (p.degree() < 1) return false;
    Factorization f = factor_over_Q(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool is_perfect_square(const UniPoly& p) {
    if (p.is_zero()) return true;
    if (p.degree() % 2 != 0) return false;
    Rational lead = p.leading();
    if (numerator(lead) < 0) return false;
    Int ns = boost::multiprecision::sqrt(numerator(lead));
    Int ds = boost::multiprecision::sqrt(denominator(lead));
    if (ns * ns != numerator(lead) || ds * ds != denominator(lead)) return false;
    Factorization f = factor_over_Q(p);
    for (const auto& [fac, mult] : f.factors) {
        (void)fac;
        if (mult % 2 != 0) return false;
    }
    return true;
}

} // namespace pgst
