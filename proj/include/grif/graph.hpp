#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grif/matrix.hpp"
#include "grif/permutation.hpp"

namespace grif {

// Simple graph (no self-loops, no duplicate edges), undirected by default.
// Directed graphs store each arc one-way.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, bool directed = false)
        : n_(n), directed_(directed), adj_(n * n, 0) {}

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    bool directed() const { return directed_; }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
        if (adj_[u * n_ + v]) throw std::invalid_argument("Graph: duplicate edge");
        adj_[u * n_ + v] = 1;
        if (!directed_) adj_[v * n_ + u] = 1;
        ++edge_count_;
    }

    bool has_edge(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

    std::size_t degree(std::size_t u) const {
        std::size_t d = 0;
        for (std::size_t v = 0; v < n_; ++v) d += adj_[u * n_ + v];
        return d;
    }

    std::vector<std::size_t> neighbors(std::size_t u) const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n_; ++v)
            if (adj_[u * n_ + v]) out.push_back(v);
        return out;
    }

    // Undirected: each edge once with u < v; directed: all arcs. Sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = directed_ ? 0 : u + 1; v < n_; ++v)
                if (adj_[u * n_ + v] && (directed_ ? u != v : true)) out.emplace_back(u, v);
        return out;
    }

    template <class F>
    FieldMatrix<F> adjacency_matrix() const {
        FieldMatrix<F> a(n_);
        for (std::size_t u = 0; u < n_; ++u)
            for (std::size_t v = 0; v < n_; ++v)
                if (adj_[u * n_ + v]) a(u, v) = F::one();
        return a;
    }

    Graph relabel(const Permutation& pi) const {
        if (pi.size() != n_) throw std::invalid_argument("Graph::relabel: permutation length mismatch");
        Graph out(n_, directed_);
        for (auto [u, v] : edges()) out.add_edge(pi(u), pi(v));
        return out;
    }

    // Induced subgraph on `vertices` (ascending, distinct); position in the
    // list becomes the new vertex index.
    Graph induced(const std::vector<std::size_t>& vertices) const {
        Graph out(vertices.size(), directed_);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = directed_ ? 0 : i + 1; j < vertices.size(); ++j)
                if (i != j && has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.directed_ == b.directed_ && a.adj_ == b.adj_;
    }

private:
    std::size_t n_ = 0;
    bool directed_ = false;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

inline bool is_clique(const Graph& g, const std::vector<std::size_t>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// {w : wu and wv are edges}, ascending.
inline std::vector<std::size_t> common_neighbors(const Graph& g, std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("common_neighbors: u == v");
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < g.vertex_count(); ++w)
        if (w != u && w != v && g.has_edge(w, u) && g.has_edge(w, v)) out.push_back(w);
    return out;
}

// Disjoint union plus the complete bipartite graph between the parts;
// vertices of g1 are shifted by g.vertex_count(). Undirected only.
inline Graph bipartite_glue(const Graph& g, const Graph& g1) {
    if (g.directed() || g1.directed())
        throw std::invalid_argument("bipartite_glue: directed graphs are not supported");
    const std::size_t n = g.vertex_count(), n1 = g1.vertex_count();
    Graph out(n + n1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : g1.edges()) out.add_edge(n + u, n + v);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n1; ++v) out.add_edge(u, n + v);
    return out;
}

} // namespace grif
