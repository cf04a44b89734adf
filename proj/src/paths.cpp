#include "pgst/paths.hpp"

#include <numeric>
#include <stdexcept>

namespace pgst {

namespace {

// p_k with p_{-1} = 0 admitted for the closed-form quotient indices
UniPoly path_poly_ext(int k) {
    if (k < -1) throw std::invalid_argument("path polynomial: index below -1");
    if (k == -1) return UniPoly::zero();
    UniPoly prev = UniPoly::zero();    // p_{-1}
    UniPoly cur = UniPoly::constant(1); // p_0
    for (int i = 0; i < k; ++i) {
        UniPoly next = UniPoly::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

bool is_prime_long(long m) {
    if (m < 2) return false;
    for (long d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

} // namespace

UniPoly path_poly(int k) {
    if (k < 0) throw std::invalid_argument("path polynomial: negative index");
    return path_poly_ext(k);
}

PathClassification classify_path(int n, int a, int b) {
    if (n < 1) throw std::invalid_argument("path: need at least one vertex");
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("path: vertex out of range");
    PathClassification out;
    out.n = n;
    out.a = a;
    out.b = b;
    if (a + b != n + 1) {
        out.reason = "a + b != n + 1";
        return out;
    }
    long m = n + 1;
    int t = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++t;
    }
    if (m == 1) {
        out.pgst = true;
        out.clause = 'a';
        out.t = t;
        out.reason = "n = 2^t - 1";
        return out;
    }
    if (!is_prime_long(m)) {
        out.reason = "n + 1 is neither a power of two nor 2^t times an odd prime";
        return out;
    }
    if (t == 0) {
        out.pgst = true;
        out.clause = 'b';
        out.p = m;
        out.reason = "n = p - 1 for an odd prime p";
        return out;
    }
    out.t = t;
    out.p = m;
    long step = 1L << (t - 1);
    if (a % step != 0) {
        out.reason = "n = 2^t p - 1 but a is not a multiple of 2^(t-1)";
        return out;
    }
    out.pgst = true;
    out.clause = 'c';
    out.reason = "n = 2^t p - 1 and a is a multiple of 2^(t-1)";
    return out;
}

ModifiedPath build_modified_path(int n, int m, std::optional<Rational> w) {
    if (n < 2) throw std::invalid_argument("modified path: need N >= 2");
    ModifiedPath out;
    out.n = n;
    out.m = m;
    if (m > n - m && n + 1 - m != m) {
        out.m = n + 1 - m; // mirror symmetry x -> N+1-x
        out.canonicalized = true;
    }
    if (out.m < 1 || out.m > n - out.m)
        throw std::invalid_argument("modified path: M out of range");
    if (w && *w == 0) throw std::invalid_argument("modified path: w must be nonzero");
    out.w = std::move(w);
    return out;
}

Graph ModifiedPath::as_graph() const {
    if (!w) throw std::logic_error("modified path: symbolic weight has no concrete graph");
    Graph g(n + 2);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(0, m, *w);
    g.add_edge(n + 1, n + 1 - m, *w);
    return g;
}

ModifiedPathQuotients modified_path_quotients(int n, int m) {
    if (n < 2) throw std::invalid_argument("modified path: need N >= 2");
    if (m < 1 || 2 * m > n) throw std::invalid_argument("modified path: M out of range");
    const UniPoly x = UniPoly::x();
    const UniPoly pm1 = path_poly_ext(m - 1);
    WeightPoly w2 = WeightPoly::w_symbol() * WeightPoly::w_symbol();

    ModifiedPathQuotients out;
    if (n % 2 == 0) {
        const int h = n / 2;
        UniPoly a_plus = x * (path_poly_ext(h) - path_poly_ext(h - 1));
        UniPoly b_plus = pm1 * (path_poly_ext(h - m) - path_poly_ext(h - m - 1));
        UniPoly a_minus = x * (path_poly_ext(h) + path_poly_ext(h - 1));
        UniPoly b_minus = pm1 * (path_poly_ext(h - m) + path_poly_ext(h - m - 1));
        out.pi_plus = WeightPoly::from_x_poly(a_plus) - w2 * WeightPoly::from_x_poly(b_plus);
        out.pi_minus = WeightPoly::from_x_poly(a_minus) - w2 * WeightPoly::from_x_poly(b_minus);
    } else {
        const int h = (n - 1) / 2;
        UniPoly a_plus = x * (path_poly_ext(h + 1) - path_poly_ext(h - 1));
        UniPoly b_plus = pm1 * (path_poly_ext(h - m + 1) - path_poly_ext(h - m - 1));
        UniPoly a_minus = x * path_poly_ext(h);
        UniPoly b_minus = pm1 * path_poly_ext(h - m);
        out.pi_plus = WeightPoly::from_x_poly(a_plus) - w2 * WeightPoly::from_x_poly(b_plus);
        out.pi_minus = WeightPoly::from_x_poly(a_minus) - w2 * WeightPoly::from_x_poly(b_minus);
    }
    return out;
}

ModifiedPathClassification classify_modified_path(int n, int m) {
    if (n < 2) throw std::invalid_argument("modified path: need N >= 2");
    if (m < 1 || 2 * m > n) throw std::invalid_argument("modified path: M out of range");
    ModifiedPathClassification out;
    out.n = n;
    out.m = m;
    if (m % 2 == 0) {
        out.verdict = ModifiedPathVerdict::NO_PGST;
        out.clause = "2a: M is even";
        return out;
    }
    long g = std::gcd(static_cast<long>(n) + 1, static_cast<long>(m));
    if (n % 2 == 0 && g == 1) {
        out.verdict = ModifiedPathVerdict::PGST;
        out.clause = "1: M odd, N even, gcd(N+1, M) = 1";
        return out;
    }
    if (n % 4 == 2) {
        for (long d = 3; d * d <= g; d += 2)
            if (g % d == 0) {
                while (g % d == 0) g /= d;
                if (d % 4 == 3) {
                    out.verdict = ModifiedPathVerdict::NO_PGST;
                    out.clause = "2b: gcd(N+1, M) has a prime factor 4r+3 and N = 2 mod 4";
                    return out;
                }
            }
        if (g > 1 && g % 4 == 3) {
            out.verdict = ModifiedPathVerdict::NO_PGST;
            out.clause = "2b: gcd(N+1, M) has a prime factor 4r+3 and N = 2 mod 4";
            return out;
        }
    }
    out.clause = "no clause applies";
    return out;
}

EvenMWitness even_m_witness(int n, int m, const Rational& w0) {
    if (m % 2 != 0) throw std::invalid_argument("witness: M must be even");
    if (m < 2 || 2 * m > n) throw std::invalid_argument("witness: M out of range");
    if (w0 == 0) throw std::invalid_argument("witness: w must be nonzero");

    EvenMWitness out;
    out.z.assign(static_cast<std::size_t>(n) + 2, Rational(0));
    for (int j = 1; j < m; j += 2)
        out.z[static_cast<std::size_t>(j)] = (j % 4 == 1) ? Rational(1) : Rational(-1);
    Rational pendant = make_rational(Int((m / 2) % 2 == 0 ? 1 : -1), Int(1)) / w0;
    out.z[0] = pendant;

    // w+ = [z 0 y], w- = [z 0 -y] with y the reverse of z's leading block
    out.w_plus = out.z;
    out.w_minus = out.z;
    for (int j = 0; j <= m; ++j) {
        const Rational& v = out.z[static_cast<std::size_t>(j)];
        out.w_plus[static_cast<std::size_t>(n + 1 - j)] = v;
        out.w_minus[static_cast<std::size_t>(n + 1 - j)] = -v;
    }

    ModifiedPath mp = build_modified_path(n, m, w0);
    const RationalMatrix a = mp.as_graph().adjacency();
    for (const auto* vec : {&out.w_plus, &out.w_minus})
        for (const Rational& entry : a.apply(*vec))
            if (!(entry == 0)) throw std::logic_error("witness: A w != 0");
    if (!(out.w_plus[1] == out.w_plus[static_cast<std::size_t>(n)]) ||
        !(out.w_minus[1] == -out.w_minus[static_cast<std::size_t>(n)]) ||
        out.w_plus[1] == 0)
        throw std::logic_error("witness: end-entry sign pattern violated");
    return out;
}

PathRootIdentities path_root_identities(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("path identities: need k, l >= 1");
    PathRootIdentities out;
    const UniPoly pk = path_poly_ext(k);
    const UniPoly pk1 = path_poly_ext(k - 1);
    const UniPoly p2k = path_poly_ext(2 * k);
    out.plus_divides = divides(pk + pk1, p2k);
    out.minus_divides = divides(pk - pk1, p2k);
    out.common_factor = poly_gcd(pk, path_poly_ext(l));
    out.have_common_roots = out.common_factor.degree() > 0;
    out.gcd_rule_holds = out.have_common_roots == (std::gcd(k + 1, l + 1) > 1);
    return out;
}

} // namespace pgst
