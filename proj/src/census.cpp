#include "pgst/census.hpp"

#include "pgst/threads.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <thread>

namespace pgst {

namespace {

constexpr int kMaxN = 8;

struct BitGraph {
    int n = 0;
    std::uint8_t rows[kMaxN] = {}; // rows[i] bit j = adjacency
    bool at(int i, int j) const { return rows[i] >> j & 1; }
    void set(int i, int j) {
        rows[i] |= std::uint8_t(1u << j);
        rows[j] |= std::uint8_t(1u << i);
    }
};

int bit_count(int n) { return n * (n - 1) / 2; }

// column-major upper-triangle index of (p, q), p < q
int cm_index(int p, int q) { return q * (q - 1) / 2 + p; }

std::uint64_t encode(const BitGraph& g) {
    const int bits = bit_count(g.n);
    std::uint64_t code = 0;
    for (int q = 1; q < g.n; ++q)
        for (int p = 0; p < q; ++p)
            if (g.at(p, q)) code |= std::uint64_t(1) << (bits - 1 - cm_index(p, q));
    return code;
}

BitGraph decode(int n, std::uint64_t code) {
    BitGraph g;
    g.n = n;
    const int bits = bit_count(n);
    for (int q = 1; q < n; ++q)
        for (int p = 0; p < q; ++p)
            if (code >> (bits - 1 - cm_index(p, q)) & 1) g.set(p, q);
    return g;
}

// smallest column-major code over all relabelings; positions are filled one
// at a time, which pins a contiguous code prefix and allows exact pruning
std::uint64_t canonical_code_bits(const BitGraph& g) {
    const int n = g.n;
    const int bits = bit_count(n);
    std::uint64_t best = ~std::uint64_t(0);
    int perm[kMaxN];
    bool used[kMaxN] = {};

    auto rec = [&](auto&& self, int pos, std::uint64_t prefix) -> void {
        if (pos == n) {
            best = std::min(best, prefix);
            return;
        }
        const int fixed = pos * (pos + 1) / 2; // bits determined once column pos is placed
        const std::uint64_t mask = ~((std::uint64_t(1) << (bits - fixed)) - 1);
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t next = prefix;
            for (int p = 0; p < pos; ++p)
                if (g.at(perm[p], v)) next |= std::uint64_t(1) << (bits - 1 - cm_index(p, pos));
            if ((next & mask) > (best & mask)) continue; // prefix already beaten
            used[v] = true;
            perm[pos] = v;
            self(self, pos + 1, next);
            used[v] = false;
        }
    };
    rec(rec, 0, 0);
    return best;
}

bool connected(const BitGraph& g) {
    if (g.n == 0) return false;
    std::uint8_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int i = 0; i < g.n; ++i)
            if (frontier >> i & 1) next |= g.rows[i];
        frontier = next & std::uint8_t(~seen);
        seen |= next;
    }
    return seen == (1u << g.n) - 1;
}

Graph to_graph(const BitGraph& g) {
    Graph out(g.n);
    for (int q = 1; q < g.n; ++q)
        for (int p = 0; p < q; ++p)
            if (g.at(p, q)) out.add_edge(p, q);
    return out;
}

BitGraph from_graph(const Graph& g) {
    if (g.n > kMaxN) throw std::invalid_argument("census: graphs beyond 8 vertices are not supported");
    if (!g.loops.empty()) throw std::invalid_argument("census: loops are not supported");
    BitGraph out;
    out.n = g.n;
    for (const auto& [u, v, w] : g.edges) {
        if (!(w == 1)) throw std::invalid_argument("census: weighted graphs are not supported");
        out.set(u, v);
    }
    return out;
}

// all graphs on n vertices up to isomorphism, grown one vertex at a time
std::vector<std::uint64_t> level_up(const std::vector<std::uint64_t>& prev, int n) {
    const int workers = thread_count();
    std::vector<std::set<std::uint64_t>> found(static_cast<std::size_t>(workers));
    auto run = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < prev.size(); i += static_cast<std::size_t>(workers)) {
            BitGraph base = decode(n - 1, prev[i]);
            base.n = n;
            for (std::uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
                BitGraph g = base;
                for (int v = 0; v < n - 1; ++v)
                    if (sub >> v & 1) g.set(v, n - 1);
                found[static_cast<std::size_t>(w)].insert(canonical_code_bits(g));
            }
        }
    };
    if (workers == 1 || prev.size() < 8) {
        run(0);
        for (int w = 1; w < workers; ++w) run(w);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    std::set<std::uint64_t> merged;
    for (const auto& s : found) merged.insert(s.begin(), s.end());
    return {merged.begin(), merged.end()};
}

std::vector<CensusHit> scan_pairs(const Graph& g) {
    std::vector<CensusHit> hits;
    GraphAnalyzer an(g);
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            if (!an.cospectrality(x, y).strongly_cospectral) continue;
            RelativeMinPolyPair pair = an.relative_pair(x, y);
            if (auto cert = pgst_sufficient(pair)) {
                CensusHit hit;
                hit.x = x;
                hit.y = y;
                hit.p_plus = pair.p_plus;
                hit.p_minus = pair.p_minus;
                hit.ratio_plus = cert->ratio_plus;
                hit.ratio_minus = cert->ratio_minus;
                hits.push_back(std::move(hit));
            }
        }
    return hits;
}

} // namespace

std::uint64_t canonical_code(const Graph& g) { return canonical_code_bits(from_graph(g)); }

Graph graph_from_code(int n, std::uint64_t code) { return to_graph(decode(n, code)); }

std::vector<Graph> connected_graphs(int n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("census: vertex count must be in 1..8");
    std::vector<std::uint64_t> level{0}; // the 1-vertex graph
    for (int k = 2; k <= n; ++k) level = level_up(level, k);
    std::vector<std::uint64_t> conn;
    for (std::uint64_t code : level)
        if (connected(decode(n, code))) conn.push_back(code);
    std::sort(conn.begin(), conn.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Graph> out;
    out.reserve(conn.size());
    for (std::uint64_t code : conn) out.push_back(to_graph(decode(n, code)));
    return out;
}

CensusResult run_census(int max_n) {
    if (max_n < 2 || max_n > kMaxN)
        throw std::invalid_argument("census: max_n must be in 2..8");
    CensusResult result;
    std::vector<std::uint64_t> level{0};
    for (int n = 2; n <= max_n; ++n) {
        level = level_up(level, n);
        std::vector<std::uint64_t> conn;
        for (std::uint64_t code : level)
            if (connected(decode(n, code))) conn.push_back(code);
        std::sort(conn.begin(), conn.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });

        std::vector<std::vector<CensusHit>> per_graph(conn.size());
        const int workers = thread_count();
        auto run = [&](int w) {
            for (std::size_t i = static_cast<std::size_t>(w); i < conn.size(); i += static_cast<std::size_t>(workers))
                per_graph[i] = scan_pairs(to_graph(decode(n, conn[i])));
        };
        if (workers == 1 || conn.size() < 8) {
            for (int w = 0; w < workers; ++w) run(w);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
            for (auto& th : pool) th.join();
        }

        CensusLevel lv;
        lv.n = n;
        lv.connected = static_cast<long>(conn.size());
        for (std::size_t i = 0; i < conn.size(); ++i) {
            if (per_graph[i].empty()) continue;
            ++lv.hit_graphs;
            CensusGraph cg;
            cg.n = n;
            cg.code = conn[i];
            cg.graph = to_graph(decode(n, conn[i]));
            cg.hits = std::move(per_graph[i]);
            result.hit_graphs.push_back(std::move(cg));
        }
        result.levels.push_back(lv);
    }
    return result;
}

} // namespace pgst
