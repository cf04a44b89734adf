#include "pgst/lattice.hpp"

#include "pgst/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgst {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

void lll_reduce(std::vector<std::vector<Int>>& basis) {
    const int m = static_cast<int>(basis.size());
    if (m <= 1) return;
    const Rational delta = make_rational(Int(99), Int(100));

    std::vector<std::vector<Rational>> mu(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
    std::vector<std::vector<Rational>> bstar(static_cast<std::size_t>(m));
    std::vector<Rational> B(static_cast<std::size_t>(m), Rational(0));

    auto init_row = [&](int k) {
        std::vector<Rational> v(basis[static_cast<std::size_t>(k)].size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = Rational(basis[static_cast<std::size_t>(k)][j]);
        for (int j = 0; j < k; ++j) {
            Rational num(0);
            for (std::size_t t = 0; t < v.size(); ++t)
                num += Rational(basis[static_cast<std::size_t>(k)][t]) * bstar[static_cast<std::size_t>(j)][t];
            Rational mukj = num / B[static_cast<std::size_t>(j)];
            mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = mukj;
            if (mukj != 0)
                for (std::size_t t = 0; t < v.size(); ++t) v[t] -= mukj * bstar[static_cast<std::size_t>(j)][t];
        }
        Rational nrm(0);
        for (const auto& e : v) nrm += e * e;
        bstar[static_cast<std::size_t>(k)] = std::move(v);
        B[static_cast<std::size_t>(k)] = nrm;
    };

    auto red = [&](int k, int l) {
        Rational& m_kl = mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
        if (2 * (m_kl < 0 ? Rational(-m_kl) : m_kl) <= 1) return;
        Int q = round_nearest(m_kl);
        for (std::size_t t = 0; t < basis[static_cast<std::size_t>(k)].size(); ++t)
            basis[static_cast<std::size_t>(k)][t] -= q * basis[static_cast<std::size_t>(l)][t];
        m_kl -= Rational(q);
        for (int j = 0; j < l; ++j)
            mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] -= Rational(q) * mu[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
    };

    init_row(0);
    int kmax = 0;
    int k = 1;
    while (k < m) {
        if (k > kmax) {
            init_row(k);
            kmax = k;
        }
        red(k, k - 1);
        const Rational mu_ = mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)];
        if (B[static_cast<std::size_t>(k)] < (delta - mu_ * mu_) * B[static_cast<std::size_t>(k - 1)]) {
            std::swap(basis[static_cast<std::size_t>(k)], basis[static_cast<std::size_t>(k - 1)]);
            for (int j = 0; j <= k - 2; ++j)
                std::swap(mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)],
                          mu[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j)]);
            const Rational Bk = B[static_cast<std::size_t>(k)];
            const Rational Bk1 = B[static_cast<std::size_t>(k - 1)];
            const Rational Bnew = Bk + mu_ * mu_ * Bk1;
            const Rational mu_new = mu_ * Bk1 / Bnew;
            // rotate the two orthogonalized directions
            std::vector<Rational> old_up = bstar[static_cast<std::size_t>(k - 1)];
            std::vector<Rational> old_lo = bstar[static_cast<std::size_t>(k)];
            for (std::size_t t = 0; t < old_up.size(); ++t) {
                bstar[static_cast<std::size_t>(k - 1)][t] = old_lo[t] + mu_ * old_up[t];
                bstar[static_cast<std::size_t>(k)][t] = (Bk / Bnew) * old_up[t] - mu_new * old_lo[t];
            }
            B[static_cast<std::size_t>(k)] = Bk1 * Bk / Bnew;
            B[static_cast<std::size_t>(k - 1)] = Bnew;
            mu[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)] = mu_new;
            for (int i = k + 1; i <= kmax; ++i) {
                Rational t = mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] - mu_ * t;
                mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] =
                    t + mu_new * mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            }
            k = std::max(1, k - 1);
        } else {
            for (int l = k - 2; l >= 0; --l) red(k, l);
            ++k;
        }
    }
}

namespace {

struct SideRoots {
    Factorization fact;
    std::vector<Real> roots;   // ascending
    std::vector<int> factor_of; // index into fact.factors per root
};

SideRoots side_roots(const UniPoly& side, int digits) {
    SideRoots out;
    out.fact = factor_over_Q(side);
    std::vector<std::pair<Real, int>> tagged;
    for (std::size_t fi = 0; fi < out.fact.factors.size(); ++fi) {
        for (auto& r : real_roots_sorted(out.fact.factors[fi].first, digits))
            tagged.emplace_back(r, static_cast<int>(fi));
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [r, t] : tagged) {
        out.roots.push_back(r);
        out.factor_of.push_back(t);
    }
    return out;
}

bool constant_per_factor(const SideRoots& side, const std::vector<long long>& coeffs,
                         std::vector<long long>& per_factor) {
    per_factor.assign(side.fact.factors.size(), 0);
    std::vector<char> seen(side.fact.factors.size(), 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        std::size_t f = static_cast<std::size_t>(side.factor_of[i]);
        if (!seen[f]) {
            seen[f] = 1;
            per_factor[f] = coeffs[i];
        } else if (per_factor[f] != coeffs[i]) {
            return false;
        }
    }
    return true;
}

bool trace_degree_check(const SideRoots& plus, const SideRoots& minus,
                        const std::vector<long long>& cp, const std::vector<long long>& cm) {
    std::vector<long long> fp, fm;
    if (!constant_per_factor(plus, cp, fp) || !constant_per_factor(minus, cm, fm)) return false;
    Rational tsum(0);
    long long dsum = 0;
    for (std::size_t f = 0; f < fp.size(); ++f) {
        tsum += Rational(fp[f]) * trace_of(plus.fact.factors[f].first);
        dsum += fp[f] * plus.fact.factors[f].first.degree();
    }
    for (std::size_t f = 0; f < fm.size(); ++f) {
        tsum += Rational(fm[f]) * trace_of(minus.fact.factors[f].first);
        dsum += fm[f] * minus.fact.factors[f].first.degree();
    }
    return tsum == 0 && dsum == 0;
}

} // namespace

std::optional<IntegerRelation> heuristic_relation_search(const RelativeMinPolyPair& pair,
                                                         int precision_digits,
                                                         long long coeff_bound) {
    if (precision_digits < 30)
        throw std::invalid_argument("relation search: precision below 30 digits is not meaningful");
    if (pair.p_plus.degree() < 1 || pair.p_minus.degree() < 1)
        throw std::invalid_argument("relation search: degenerate relative polynomials");

    SideRoots plus = side_roots(pair.p_plus, precision_digits);
    SideRoots minus = side_roots(pair.p_minus, precision_digits);
    const std::size_t np = plus.roots.size();
    const std::size_t nm = minus.roots.size();
    const std::size_t k = np + nm;

    const Int n2 = boost::multiprecision::pow(Int(10), static_cast<unsigned>(precision_digits));
    const Int n1 = n2 * 1000000000;

    std::vector<std::vector<Int>> rows(k, std::vector<Int>(k + 2, Int(0)));
    {
        unsigned save = Real::default_precision();
        Real::default_precision(static_cast<unsigned>(precision_digits) + 30);
        Real scale(n2.str());
        for (std::size_t i = 0; i < k; ++i) {
            rows[i][i] = 1;
            rows[i][k] = n1;
            const Real& v = i < np ? plus.roots[i] : minus.roots[i - np];
            Real scaled = v * scale;
            Real shifted = scaled + (scaled >= 0 ? Real(0.5) : Real(-0.5));
            rows[i][k + 1] = shifted.convert_to<Int>();
        }
        Real::default_precision(save);
    }

    lll_reduce(rows);

    const Int small = boost::multiprecision::pow(Int(10), static_cast<unsigned>(precision_digits / 2));
    struct Candidate {
        std::vector<long long> c;
        bool odd;
        Int norm2;
    };
    std::vector<Candidate> cands;
    for (const auto& row : rows) {
        if (row[k] != 0) continue; // coefficient sum must vanish exactly
        if (boost::multiprecision::abs(row[k + 1]) > small) continue;
        bool nonzero = false, fits = true;
        Int norm2(0);
        std::vector<long long> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            if (boost::multiprecision::abs(row[i]) > coeff_bound) {
                fits = false;
                break;
            }
            c[i] = row[i].convert_to<long long>();
            if (c[i] != 0) nonzero = true;
            norm2 += row[i] * row[i];
        }
        if (!fits || !nonzero) continue;
        long long msum = 0;
        for (std::size_t i = np; i < k; ++i) msum += c[i];
        cands.push_back({std::move(c), (msum % 2 + 2) % 2 == 1, std::move(norm2)});
    }
    if (cands.empty()) return std::nullopt;

    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.odd != b.odd) return a.odd; // odd parity first: it decides the question
        return a.norm2 < b.norm2;
    });
    const Candidate& pick = cands.front();

    IntegerRelation rel;
    rel.ell.assign(pick.c.begin(), pick.c.begin() + static_cast<long>(np));
    rel.m.assign(pick.c.begin() + static_cast<long>(np), pick.c.end());
    // canonical sign: first nonzero coefficient positive
    for (std::size_t i = 0; i < pick.c.size(); ++i) {
        if (pick.c[i] == 0) continue;
        if (pick.c[i] < 0) {
            for (auto& v : rel.ell) v = -v;
            for (auto& v : rel.m) v = -v;
        }
        break;
    }
    rel.sum_m_odd = pick.odd;
    {
        unsigned save = Real::default_precision();
        Real::default_precision(static_cast<unsigned>(precision_digits) + 30);
        Real acc(0);
        for (std::size_t i = 0; i < np; ++i) acc += Real(rel.ell[i]) * plus.roots[i];
        for (std::size_t i = 0; i < nm; ++i) acc += Real(rel.m[i]) * minus.roots[i];
        rel.residual = boost::multiprecision::abs(acc).convert_to<double>();
        Real::default_precision(save);
    }
    rel.exact_verified = trace_degree_check(plus, minus, rel.ell, rel.m);
    return rel;
}

bool verify_relation_exact(const RelativeMinPolyPair& pair, const IntegerRelation& rel) {
    SideRoots plus = side_roots(pair.p_plus, 40);
    SideRoots minus = side_roots(pair.p_minus, 40);
    if (rel.ell.size() != plus.roots.size() || rel.m.size() != minus.roots.size()) return false;
    long long csum = 0;
    for (long long v : rel.ell) csum += v;
    for (long long v : rel.m) csum += v;
    if (csum != 0) return false;
    return trace_degree_check(plus, minus, rel.ell, rel.m);
}

} // namespace pgst
