#include "pgst/involutions.hpp"

#include "pgst/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgst {

namespace {

struct Signature {
    Rational loop;
    std::vector<Rational> weights; // sorted incident edge weights
    bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const Graph& g) {
    std::vector<Signature> sig(static_cast<std::size_t>(g.n));
    for (const auto& [u, v, w] : g.edges) {
        sig[static_cast<std::size_t>(u)].weights.push_back(w);
        sig[static_cast<std::size_t>(v)].weights.push_back(w);
    }
    for (const auto& [v, w] : g.loops) sig[static_cast<std::size_t>(v)].loop = w;
    for (auto& s : sig) std::sort(s.weights.begin(), s.weights.end());
    return sig;
}

Involution finish(const Graph& g, std::vector<int> sigma) {
    Involution inv;
    inv.sigma = std::move(sigma);
    for (int i = 0; i < g.n; ++i) {
        if (inv.sigma[static_cast<std::size_t>(i)] == i) inv.fixed.push_back(i);
        else if (i < inv.sigma[static_cast<std::size_t>(i)]) inv.reps.push_back(i);
    }
    return inv;
}

bool preserves_weights(const RationalMatrix& a, const std::vector<int>& sigma) {
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (a.at(i, j) != a.at(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

} // namespace

std::vector<Involution> find_involutions(const Graph& g) {
    g.validate();
    const RationalMatrix a = g.adjacency();
    const auto sig = signatures(g);
    std::vector<Involution> out;
    std::vector<int> sigma(static_cast<std::size_t>(g.n), -1);

    auto consistent = [&](int i, int j) {
        // partial check: rows already assigned must map consistently
        for (int k = 0; k < g.n; ++k) {
            int sk = sigma[static_cast<std::size_t>(k)];
            if (sk < 0) continue;
            if (a.at(i, k) != a.at(j, sk)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int i) -> void {
        while (i < g.n && sigma[static_cast<std::size_t>(i)] >= 0) ++i;
        if (i == g.n) {
            bool identity = true;
            for (int k = 0; k < g.n; ++k)
                if (sigma[static_cast<std::size_t>(k)] != k) {
                    identity = false;
                    break;
                }
            if (!identity && preserves_weights(a, sigma)) out.push_back(finish(g, sigma));
            return;
        }
        for (int j = i; j < g.n; ++j) { // j = i keeps the vertex fixed
            if (j != i && sigma[static_cast<std::size_t>(j)] >= 0) continue;
            if (!(sig[static_cast<std::size_t>(i)] == sig[static_cast<std::size_t>(j)])) continue;
            if (a.at(i, i) != a.at(j, j)) continue;
            if (!consistent(i, j) || (i != j && !consistent(j, i))) continue;
            sigma[static_cast<std::size_t>(i)] = j;
            sigma[static_cast<std::size_t>(j)] = i;
            self(self, i + 1);
            sigma[static_cast<std::size_t>(i)] = -1;
            if (j != i) sigma[static_cast<std::size_t>(j)] = -1;
        }
    };
    rec(rec, 0);
    return out; // backtracking in ascending image order yields lexicographic sigma order
}

Involution make_involution(const Graph& g, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != g.n) throw std::invalid_argument("involution: size mismatch");
    for (int i = 0; i < g.n; ++i) {
        int s = sigma[static_cast<std::size_t>(i)];
        if (s < 0 || s >= g.n || sigma[static_cast<std::size_t>(s)] != i)
            throw std::invalid_argument("involution: not an order-2 permutation");
    }
    if (!preserves_weights(g.adjacency(), sigma))
        throw std::invalid_argument("involution: does not preserve weights");
    bool identity = true;
    for (int i = 0; i < g.n; ++i)
        if (sigma[static_cast<std::size_t>(i)] != i) identity = false;
    if (identity) throw std::invalid_argument("involution: identity is excluded");
    return finish(g, sigma);
}

QuotientPair quotient_pair(const Graph& g, const Involution& inv) {
    const RationalMatrix a = g.adjacency();
    if (!preserves_weights(a, inv.sigma))
        throw std::invalid_argument("involution: does not preserve weights");
    const int k = static_cast<int>(inv.reps.size());
    const int s = static_cast<int>(inv.fixed.size());

    QuotientPair out;
    out.a_plus = RationalMatrix(k + s);
    out.a_minus = RationalMatrix(k);
    for (int i = 0; i < k; ++i) {
        int ri = inv.reps[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            int rj = inv.reps[static_cast<std::size_t>(j)];
            int srj = inv.sigma[static_cast<std::size_t>(rj)];
            out.a_plus.at(i, j) = a.at(ri, rj) + a.at(ri, srj);
            out.a_minus.at(i, j) = a.at(ri, rj) - a.at(ri, srj);
        }
        for (int c = 0; c < s; ++c) {
            int fc = inv.fixed[static_cast<std::size_t>(c)];
            out.a_plus.at(i, k + c) = a.at(ri, fc);
            out.a_plus.at(k + c, i) = 2 * a.at(ri, fc);
        }
    }
    for (int c = 0; c < s; ++c)
        for (int d = 0; d < s; ++d)
            out.a_plus.at(k + c, k + d) =
                a.at(inv.fixed[static_cast<std::size_t>(c)], inv.fixed[static_cast<std::size_t>(d)]);

    out.pi_plus = char_poly(out.a_plus);
    out.pi_minus = char_poly(out.a_minus);
    return out;
}

SymbolicQuotients symbolic_quotient_pair(const Graph& g, const Involution& inv, int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= g.n || v >= g.n)
        throw std::invalid_argument("symbolic quotient: bad edge endpoints");
    if (g.weight(u, v) != 0)
        throw std::invalid_argument("symbolic quotient: designated edge already has a rational weight");

    const int su = inv.sigma[static_cast<std::size_t>(u)];
    const int sv = inv.sigma[static_cast<std::size_t>(v)];
    const RationalMatrix base = g.adjacency();
    if (!preserves_weights(base, inv.sigma))
        throw std::invalid_argument("involution: does not preserve weights");

    const UniPoly wsym = UniPoly::x(); // the weight symbol
    const int n = g.n;
    std::vector<std::vector<UniPoly>> aw(static_cast<std::size_t>(n), std::vector<UniPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (base.at(i, j) != 0) aw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = UniPoly::constant(base.at(i, j));
    auto add_w = [&](int i, int j) {
        aw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            aw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + wsym;
        aw[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
            aw[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] + wsym;
    };
    add_w(u, v);
    const bool mirrored = !((su == u && sv == v) || (su == v && sv == u));
    if (mirrored) add_w(su, sv); // the edge orbit has two members

    const int k = static_cast<int>(inv.reps.size());
    const int s = static_cast<int>(inv.fixed.size());
    std::vector<std::vector<UniPoly>> ap(static_cast<std::size_t>(k + s), std::vector<UniPoly>(static_cast<std::size_t>(k + s)));
    std::vector<std::vector<UniPoly>> am(static_cast<std::size_t>(k), std::vector<UniPoly>(static_cast<std::size_t>(k)));
    auto entry = [&](int i, int j) -> const UniPoly& { return aw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    for (int i = 0; i < k; ++i) {
        int ri = inv.reps[static_cast<std::size_t>(i)];
        for (int j = 0; j < k; ++j) {
            int rj = inv.reps[static_cast<std::size_t>(j)];
            int srj = inv.sigma[static_cast<std::size_t>(rj)];
            ap[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(ri, rj) + entry(ri, srj);
            am[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(ri, rj) - entry(ri, srj);
        }
        for (int c = 0; c < s; ++c) {
            int fc = inv.fixed[static_cast<std::size_t>(c)];
            ap[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + c)] = entry(ri, fc);
            ap[static_cast<std::size_t>(k + c)][static_cast<std::size_t>(i)] = entry(ri, fc) + entry(ri, fc);
        }
    }
    for (int c = 0; c < s; ++c)
        for (int d = 0; d < s; ++d)
            ap[static_cast<std::size_t>(k + c)][static_cast<std::size_t>(k + d)] =
                entry(inv.fixed[static_cast<std::size_t>(c)], inv.fixed[static_cast<std::size_t>(d)]);

    SymbolicQuotients out;
    out.pi_plus = char_poly_w(ap);
    out.pi_minus = char_poly_w(am);
    return out;
}

namespace {

WeightDecomposition decompose_quadratic(const WeightPoly& side) {
    std::vector<Rational> c0, c2;
    for (const auto& cw : side.cx) {
        if (cw.degree() > 2 || !(cw.coeff(1) == 0))
            throw std::invalid_argument("decomposition: expected an even quadratic in w");
        c0.push_back(cw.coeff(0));
        c2.push_back(-cw.coeff(2));
    }
    UniPoly p0(std::move(c0)), p2(std::move(c2));
    WeightDecomposition out;
    out.g = (p2.is_zero()) ? p0.monic() : poly_gcd(p0, p2);
    out.p = UniPoly::divide_exact(p0, out.g);
    out.q = p2.is_zero() ? UniPoly::zero() : UniPoly::divide_exact(p2, out.g);
    out.p_square = is_perfect_square(out.p);
    out.q_square = is_perfect_square(out.q);
    return out;
}

} // namespace

WeightDecomposition weighted_edge_decomposition(const WeightPoly& side) {
    if (side.degree_w() > 2) throw std::invalid_argument("decomposition: degree in w exceeds 2");
    for (const auto& cw : side.cx)
        if (!(cw.coeff(1) == 0))
            throw std::invalid_argument("decomposition: linear w term present; decompose at the product level");
    return decompose_quadratic(side);
}

WeightDecomposition product_weight_decomposition(const SymbolicQuotients& q) {
    return decompose_quadratic(q.pi_plus * q.pi_minus);
}

EdgeDecomposition weighted_edge_decomposition(const Graph& g, const Involution& inv, int u, int v) {
    EdgeDecomposition out;
    out.quotients = symbolic_quotient_pair(g, inv, u, v);
    auto even_in_w = [](const WeightPoly& s) {
        for (const auto& cw : s.cx)
            if (!(cw.coeff(1) == 0)) return false;
        return true;
    };
    if (even_in_w(out.quotients.pi_plus) && even_in_w(out.quotients.pi_minus)) {
        out.plus = weighted_edge_decomposition(out.quotients.pi_plus);
        out.minus = weighted_edge_decomposition(out.quotients.pi_minus);
    } else {
        out.per_side = false;
        out.plus = product_weight_decomposition(out.quotients);
    }
    return out;
}

} // namespace pgst
