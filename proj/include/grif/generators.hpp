#pragma once

#include <stdexcept>
#include <tuple>

#include "grif/graph.hpp"
#include "grif/rng.hpp"

namespace grif {
namespace gen {

inline Graph edgeless(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph erdos_renyi(std::size_t n, double density, Rng& rng) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.chance(density)) g.add_edge(u, v);
    return g;
}

// Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges join disjoint
// pairs. Triangle-free, 3-regular on 10 vertices.
inline Graph petersen() {
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    Graph g(10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.add_edge(i, j);
        }
    return g;
}

// Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}:
// the Shrikhande graph, SRG(16, 6, 2, 2).
inline Graph shrikhande() {
    Graph g(16);
    const int diffs[][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (auto [dx, dy] : diffs) {
                int u = x * 4 + y, v = ((x + dx) % 4) * 4 + (y + dy) % 4;
                if (u < v) g.add_edge(u, v);
            }
    return g;
}

// 4x4 rook's graph: same row or same column on a 4x4 board. The other
// SRG(16, 6, 2, 2); not isomorphic to the Shrikhande graph.
inline Graph rook4() {
    Graph g(16);
    for (int i = 0; i < 16; ++i)
        for (int j = i + 1; j < 16; ++j)
            if (i / 4 == j / 4 || i % 4 == j % 4) g.add_edge(i, j);
    return g;
}

// Pairing-model k-regular graph; resamples on self-loops or multi-edges,
// up to 100 attempts.
inline Graph random_regular(std::size_t n, std::size_t k, Rng& rng) {
    if (k >= n || (n * k) % 2 != 0)
        throw std::invalid_argument("random_regular: need k < n and n*k even");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::size_t> stubs;
        stubs.reserve(n * k);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t c = 0; c < k; ++c) stubs.push_back(v);
        rng.shuffle(stubs);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i < stubs.size() && ok; i += 2) {
            std::size_t u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_regular: no simple pairing found in 100 attempts");
}

// An Erdos-Renyi graph, a uniformly relabeled copy, and the relabeling.
inline std::tuple<Graph, Graph, Permutation> random_graph_pair(std::size_t n, double density,
                                                               std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph_pair: n must be at least 1");
    Rng rng(seed);
    Graph g = erdos_renyi(n, density, rng);
    Permutation pi = Permutation::random(n, rng);
    return {g, g.relabel(pi), pi};
}

} // namespace gen
} // namespace grif
