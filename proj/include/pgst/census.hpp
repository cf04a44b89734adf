#pragma once

#include "pgst/engine.hpp"
#include "pgst/graph.hpp"

#include <cstdint>
#include <vector>

namespace pgst {

// Canonical form of an unweighted loopless graph (n <= 8): the adjacency
// bits of the upper triangle taken column by column, minimized over all
// vertex relabelings; earlier bits are more significant, so integer order
// is lexicographic order.
std::uint64_t canonical_code(const Graph& g);

Graph graph_from_code(int n, std::uint64_t code);

// Connected graphs on n vertices up to isomorphism, as canonical
// representatives sorted by (edge count, code).
std::vector<Graph> connected_graphs(int n);

// A vertex pair certified by the irreducible-ratio rule.
struct CensusHit {
    int x = 0, y = 0; // pair within the canonical representative
    UniPoly p_plus, p_minus;
    Rational ratio_plus, ratio_minus;
};

struct CensusGraph {
    int n = 0;
    std::uint64_t code = 0;
    Graph graph{1};
    std::vector<CensusHit> hits; // pairs in (x, y) lexicographic order
};

struct CensusLevel {
    int n = 0;
    long connected = 0; // connected graphs up to isomorphism
    long hit_graphs = 0;
};

struct CensusResult {
    std::vector<CensusLevel> levels;      // n = 2..max_n
    std::vector<CensusGraph> hit_graphs;  // sorted by (n, edge count, code)
};

// Scan all connected unweighted graphs with 2..max_n vertices and report
// every pair the ratio rule certifies.  Deterministic; parallelized across
// graphs (PGST_THREADS overrides the worker count).
CensusResult run_census(int max_n);

} // namespace pgst
