#include "pgst/spectra.hpp"

#include <stdexcept>

namespace pgst {

UniPoly min_poly_relative(const RationalMatrix& a, const std::vector<Rational>& z) {
    const int n = a.size();
    if (static_cast<int>(z.size()) != n) throw std::invalid_argument("spectra: vector size mismatch");

    struct PivotRow {
        std::vector<Rational> vec;
        std::vector<Rational> combo; // coordinates in the Krylov basis
        int col;
    };
    std::vector<PivotRow> rows;

    std::vector<Rational> v = z;
    for (int step = 0; step <= n; ++step) {
        std::vector<Rational> red = v;
        std::vector<Rational> combo(static_cast<std::size_t>(step) + 1, Rational(0));
        combo.back() = 1;
        for (const auto& r : rows) {
            const Rational& lead = red[static_cast<std::size_t>(r.col)];
            if (lead == 0) continue;
            Rational f = lead / r.vec[static_cast<std::size_t>(r.col)];
            for (int j = 0; j < n; ++j)
                if (r.vec[static_cast<std::size_t>(j)] != 0)
                    red[static_cast<std::size_t>(j)] -= f * r.vec[static_cast<std::size_t>(j)];
            for (std::size_t j = 0; j < r.combo.size(); ++j) combo[j] -= f * r.combo[j];
        }

        int pivot = -1;
        std::size_t best_bits = 0;
        for (int j = 0; j < n; ++j) {
            const Rational& e = red[static_cast<std::size_t>(j)];
            if (e == 0) continue;
            std::size_t bits = bit_size(e);
            if (pivot < 0 || bits < best_bits) {
                pivot = j;
                best_bits = bits;
            }
        }
        if (pivot < 0) return UniPoly(std::move(combo)); // monic by construction

        rows.push_back({std::move(red), std::move(combo), pivot});
        v = a.apply(v);
    }
    throw std::logic_error("spectra: krylov chain exceeded dimension");
}

GraphAnalyzer::GraphAnalyzer(Graph g) : g_(std::move(g)) {
    g_.validate();
    a_ = g_.adjacency();
}

void GraphAnalyzer::check_vertex(int v) const {
    if (v < 0 || v >= g_.n) throw std::invalid_argument("spectra: vertex out of range");
}

const UniPoly& GraphAnalyzer::char_poly_of_graph() {
    if (!phi_) phi_ = char_poly(a_);
    return *phi_;
}

const UniPoly& GraphAnalyzer::deleted_char_poly(int v) {
    check_vertex(v);
    auto it = deleted_.find(v);
    if (it == deleted_.end()) it = deleted_.emplace(v, char_poly(a_.minor_removing(v))).first;
    return it->second;
}

bool GraphAnalyzer::cospectral(int x, int y) {
    check_vertex(x);
    check_vertex(y);
    return deleted_char_poly(x) == deleted_char_poly(y);
}

RelativeMinPolyPair GraphAnalyzer::relative_pair(int x, int y) {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw std::invalid_argument("spectra: need two distinct vertices");
    auto key = std::minmax(x, y);
    auto it = pairs_.find(key);
    if (it != pairs_.end()) return it->second;

    const int n = g_.n;
    std::vector<Rational> zp(static_cast<std::size_t>(n), Rational(0));
    std::vector<Rational> zm = zp;
    zp[static_cast<std::size_t>(x)] = 1;
    zp[static_cast<std::size_t>(y)] += 1;
    zm[static_cast<std::size_t>(x)] = 1;
    zm[static_cast<std::size_t>(y)] -= 1;

    RelativeMinPolyPair out;
    out.p_plus = min_poly_relative(a_, zp);
    out.p_minus = min_poly_relative(a_, zm);
    if (cospectral(x, y)) {
        auto [q, r] = UniPoly::divmod(char_poly_of_graph(), out.p_plus * out.p_minus);
        if (!r.is_zero()) throw std::logic_error("spectra: relative factor split failed");
        out.p_zero = q;
        out.p_zero_available = true;
    }
    pairs_.emplace(key, out);
    return out;
}

CospectralityReport GraphAnalyzer::cospectrality(int x, int y) {
    CospectralityReport rep;
    rep.cospectral = cospectral(x, y);
    RelativeMinPolyPair pr = relative_pair(x, y);
    UniPoly g = poly_gcd(pr.p_plus, pr.p_minus);
    rep.parallel = g.degree() == 0;
    rep.strongly_cospectral = rep.cospectral && rep.parallel;
    if (rep.strongly_cospectral) {
        rep.witness = "deleted characteristic polynomials match and gcd(P+, P-) = 1";
    } else if (!rep.cospectral) {
        rep.witness = "deleted characteristic polynomials differ";
    } else {
        rep.witness = "shared eigenvalue support, gcd(P+, P-) = " + g.str();
    }
    return rep;
}

RelativeMinPolyPair relative_pair(const Graph& g, int x, int y) {
    GraphAnalyzer an(g);
    return an.relative_pair(x, y);
}

bool is_cospectral(const Graph& g, int x, int y) {
    GraphAnalyzer an(g);
    return an.cospectral(x, y);
}

CospectralityReport is_strongly_cospectral(const Graph& g, int x, int y) {
    GraphAnalyzer an(g);
    return an.cospectrality(x, y);
}

} // namespace pgst
