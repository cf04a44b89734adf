#include "pgst/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgst {

Graph Graph::path(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

Graph Graph::complete(int n) {
    Graph g;
    g.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& e) {
    Graph g;
    g.n = n;
    for (auto [u, v] : e) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v, const Rational& w) {
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v, w);
}

void Graph::add_loop(int v, const Rational& w) { loops.emplace_back(v, w); }

Rational Graph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& [a, b, w] : edges)
        if (a == u && b == v) return w;
    return Rational(0);
}

void Graph::validate() const {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be positive");
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v, w] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self edge (use a loop)");
        if (w == 0) throw std::invalid_argument("graph: zero edge weight");
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw std::invalid_argument("graph: duplicate edge");
    }
    std::set<int> loop_seen;
    for (const auto& [v, w] : loops) {
        if (v < 0 || v >= n) throw std::invalid_argument("graph: loop vertex out of range");
        if (w == 0) throw std::invalid_argument("graph: zero loop weight");
        if (!loop_seen.insert(v).second) throw std::invalid_argument("graph: duplicate loop");
    }
}

bool Graph::is_connected() const {
    if (n <= 1) return true;
    auto nb = neighbor_lists();
    std::vector<char> vis(static_cast<std::size_t>(n), 0);
    std::vector<int> stack = {0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : nb[static_cast<std::size_t>(u)]) {
            if (!vis[static_cast<std::size_t>(v)]) {
                vis[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

RationalMatrix Graph::adjacency() const {
    RationalMatrix a(n);
    for (const auto& [u, v, w] : edges) {
        a.at(u, v) = w;
        a.at(v, u) = w;
    }
    for (const auto& [v, w] : loops) a.at(v, v) = w;
    return a;
}

std::vector<std::vector<int>> Graph::neighbor_lists() const {
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
    for (const auto& [u, v, w] : edges) {
        nb[static_cast<std::size_t>(u)].push_back(v);
        nb[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& l : nb) std::sort(l.begin(), l.end());
    return nb;
}

} // namespace pgst
