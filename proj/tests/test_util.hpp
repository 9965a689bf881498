#pragma once

// Shared helpers for the test suites: independent re-implementations used as
// oracles (graph6 writer, Floyd-Warshall, brute-force matching and
// isomorphism search) plus seeded instance generators. None of these call
// into the code paths they check.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wca/graph.hpp"
#include "wca/model.hpp"

namespace testutil {

// Independent graph6 writer (column-major upper triangle, 6-bit groups).
inline std::string encode_graph6(const wca::DirectedGraph& g) {
    const int n = g.vertex_count();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(63 + n));
    } else {
        s.push_back(126);
        s.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        s.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        s.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.has_arc(i, j) ? 1 : 0);
            if (++nbits == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) s.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return s;
}

// All-pairs shortest paths by Floyd-Warshall; dist uses the same no-path
// sentinel convention (vertex count) as the solver.
inline std::vector<std::vector<int>> floyd_warshall(const wca::DirectedGraph& g) {
    const int n1 = g.vertex_count();
    const int inf = 1000000;
    std::vector<std::vector<int>> d(n1 + 1, std::vector<int>(n1 + 1, inf));
    for (int u = 1; u <= n1; ++u)
        for (int v = 1; v <= n1; ++v)
            if (u != v && g.has_arc(u, v)) d[u][v] = 1;
    for (int w = 1; w <= n1; ++w)
        for (int u = 1; u <= n1; ++u)
            for (int v = 1; v <= n1; ++v)
                d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
    for (int u = 1; u <= n1; ++u)
        for (int v = 1; v <= n1; ++v)
            if (d[u][v] >= inf) d[u][v] = n1;
    return d;
}

// Hall-condition check by subset enumeration: rows need distinct columns.
inline bool matchable_by_halls_condition(const std::vector<std::vector<bool>>& alive) {
    const int n = static_cast<int>(alive.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
        int rows = 0, cols = 0;
        for (int r = 0; r < n; ++r)
            if (mask & (1 << r)) {
                ++rows;
                for (int c = 0; c < n; ++c)
                    if (alive[r][c]) cols |= 1 << c;
            }
        if (__builtin_popcount(cols) < rows) return false;
    }
    return true;
}

inline bool brute_force_isomorphic(const wca::DirectedGraph& g, const wca::DirectedGraph& h,
                                   wca::PermutationMatrix* found = nullptr) {
    const int n = g.vertex_count();
    if (h.vertex_count() != n) return false;
    std::vector<int> map(n);
    std::iota(map.begin(), map.end(), 1);
    do {
        bool ok = true;
        for (int u = 1; u <= n && ok; ++u)
            for (int v = 1; v <= n && ok; ++v)
                if (u != v && g.has_arc(u, v) != h.has_arc(map[u - 1], map[v - 1])) ok = false;
        if (ok) {
            if (found) found->perm = map;
            return true;
        }
    } while (std::next_permutation(map.begin(), map.end()));
    return false;
}

inline wca::DirectedGraph random_digraph(std::mt19937& rng, int vertex_count, double density,
                                         bool undirected) {
    wca::DirectedGraph g(vertex_count);
    std::bernoulli_distribution arc(density);
    for (int u = 1; u <= vertex_count; ++u)
        for (int v = undirected ? u + 1 : 1; v <= vertex_count; ++v) {
            if (u == v) continue;
            if (arc(rng)) {
                if (undirected)
                    g.add_edge(u, v);
                else
                    g.add_arc(u, v);
            }
        }
    return g;
}

inline wca::DirectedGraph random_strongly_connected(std::mt19937& rng, int vertex_count,
                                                    double density, bool undirected) {
    for (;;) {
        wca::DirectedGraph g = random_digraph(rng, vertex_count, density, undirected);
        if (wca::is_strongly_connected(g)) return g;
    }
}

// Two directed triangles sharing vertex 5, plus a pendant 2-cycle to vertex
// 6: strongly connected, and vertex 6 forces its only neighbour to repeat, so
// no closed tour through all vertices exists.
inline wca::DirectedGraph bowtie_with_pendant() {
    wca::DirectedGraph g(6);
    g.add_arc(1, 2);
    g.add_arc(2, 5);
    g.add_arc(5, 1);
    g.add_arc(5, 3);
    g.add_arc(3, 4);
    g.add_arc(4, 5);
    g.add_arc(1, 6);
    g.add_arc(6, 1);
    return g;
}

// Five vertices, two directed triangles through the shared vertex 5.
inline wca::DirectedGraph bowtie() {
    wca::DirectedGraph g(5);
    g.add_arc(1, 2);
    g.add_arc(2, 5);
    g.add_arc(5, 1);
    g.add_arc(5, 3);
    g.add_arc(3, 4);
    g.add_arc(4, 5);
    return g;
}

} // namespace testutil
