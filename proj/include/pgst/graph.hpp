#pragma once

#include "pgst/matrix.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace pgst {

// Undirected graph with nonzero rational edge weights and optional rational
// loop weights.  Vertices are 0-based internally; text formats are 1-based.
struct Graph {
    int n = 0;
    std::vector<std::tuple<int, int, Rational>> edges; // u < v, at most one per pair
    std::vector<std::pair<int, Rational>> loops;       // at most one per vertex

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& e);

    void add_edge(int u, int v, const Rational& w = Rational(1));
    void add_loop(int v, const Rational& w);
    Rational weight(int u, int v) const; // 0 if absent

    void validate() const; // throws std::invalid_argument on malformed input
    bool is_connected() const;
    RationalMatrix adjacency() const;
    std::vector<std::vector<int>> neighbor_lists() const;
};

} // namespace pgst
