#pragma once

#include "pgst/graph.hpp"

#include <map>
#include <optional>
#include <string>

namespace pgst {

// Minimal polynomials of the adjacency matrix relative to e_x + e_y and
// e_x - e_y, plus the cofactor with the characteristic polynomial.  The
// cofactor requires the char poly to split as p_plus * p_minus * p_zero,
// which holds for cospectral pairs only.
struct RelativeMinPolyPair {
    UniPoly p_plus;
    UniPoly p_minus;
    UniPoly p_zero;
    bool p_zero_available = false;
};

struct CospectralityReport {
    bool cospectral = false;
    bool parallel = false;
    bool strongly_cospectral = false;
    std::string witness;
};

// Minimal monic p with p(A)z = 0 (exact Krylov elimination).
UniPoly min_poly_relative(const RationalMatrix& a, const std::vector<Rational>& z);

// Per-graph cache: characteristic polynomial, vertex-deleted variants,
// relative pairs.  All results exact.
class GraphAnalyzer {
public:
    explicit GraphAnalyzer(Graph g);

    const Graph& graph() const { return g_; }
    const RationalMatrix& adjacency() const { return a_; }
    const UniPoly& char_poly_of_graph();
    const UniPoly& deleted_char_poly(int v);
    bool cospectral(int x, int y);
    CospectralityReport cospectrality(int x, int y);
    RelativeMinPolyPair relative_pair(int x, int y);

private:
    Graph g_;
    RationalMatrix a_;
    std::optional<UniPoly> phi_;
    std::map<int, UniPoly> deleted_;
    std::map<std::pair<int, int>, RelativeMinPolyPair> pairs_;
    void check_vertex(int v) const;
};

RelativeMinPolyPair relative_pair(const Graph& g, int x, int y);
bool is_cospectral(const Graph& g, int x, int y);
CospectralityReport is_strongly_cospectral(const Graph& g, int x, int y);

} // namespace pgst
