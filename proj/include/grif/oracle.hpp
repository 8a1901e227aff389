#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grif/graph.hpp"
#include "grif/permutation.hpp"
#include "grif/sat.hpp"

namespace grif {
namespace oracle {

namespace detail {

inline std::vector<std::size_t> degree_signature(const Graph& g, std::size_t v) {
    std::vector<std::size_t> sig;
    for (std::size_t w : g.neighbors(v)) sig.push_back(g.degree(w));
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline bool extend_isomorphism(const Graph& g1, const Graph& g2,
                               const std::vector<std::size_t>& order, std::size_t depth,
                               std::vector<std::size_t>& image, std::vector<bool>& used,
                               const std::vector<std::vector<bool>>& candidate) {
    if (depth == order.size()) return true;
    const std::size_t v = order[depth];
    for (std::size_t w = 0; w < g2.vertex_count(); ++w) {
        if (used[w] || !candidate[v][w]) continue;
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
            const std::size_t u = order[d];
            if (g1.has_edge(v, u) != g2.has_edge(w, image[u]) ||
                g1.has_edge(u, v) != g2.has_edge(image[u], w))
                ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used[w] = true;
        if (extend_isomorphism(g1, g2, order, depth + 1, image, used, candidate)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace detail

struct IsoWitness {
    std::optional<Permutation> permutation;
};

// Exhaustive backtracking with degree-sequence and neighbor-degree pruning.
// Exact at any size but meant for n <= 12; larger inputs get a warning and
// still run. A returned witness is re-verified edge by edge.
inline IsoWitness brute_force_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
        g1.directed() != g2.directed())
        return {};
    const std::size_t n = g1.vertex_count();
    if (n > 12)
        std::cerr << "brute_force_isomorphism: n = " << n
                  << " exceeds the recommended limit of 12; this may take a while\n";
    if (n == 0) return {Permutation::identity(0)};

    std::vector<std::size_t> deg1(n), deg2(n);
    for (std::size_t v = 0; v < n; ++v) {
        deg1[v] = g1.degree(v);
        deg2[v] = g2.degree(v);
    }
    {
        auto s1 = deg1, s2 = deg2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2) return {};
    }

    std::vector<std::vector<bool>> candidate(n, std::vector<bool>(n, false));
    for (std::size_t v = 0; v < n; ++v) {
        const auto sig_v = detail::degree_signature(g1, v);
        for (std::size_t w = 0; w < n; ++w)
            candidate[v][w] = deg1[v] == deg2[w] && sig_v == detail::degree_signature(g2, w);
    }

    // Map vertices in an order that keeps each new vertex attached to the
    // already-mapped ones, so adjacency constraints bite early.
    std::vector<std::size_t> order;
    std::vector<bool> placed(n, false);
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t best = n, best_links = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t links = 0;
            for (std::size_t u : order)
                links += (g1.has_edge(v, u) || g1.has_edge(u, v)) ? 1 : 0;
            if (best == n || links > best_links ||
                (links == best_links && deg1[v] > deg1[best])) {
                best = v;
                best_links = links;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }

    std::vector<std::size_t> image(n, n);
    std::vector<bool> used(n, false);
    if (!detail::extend_isomorphism(g1, g2, order, 0, image, used, candidate)) return {};

    Permutation pi(image);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (g1.has_edge(u, v) != g2.has_edge(pi(u), pi(v)))
                throw std::logic_error("brute_force_isomorphism: witness failed verification (bug)");
    return {std::move(pi)};
}

// Bron-Kerbosch with the Tomita pivot (most candidates dominated). Vertices
// are scanned in ascending order so the result is deterministic.
inline std::vector<std::size_t> max_clique_exact(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return {};

    std::vector<std::size_t> best;
    std::vector<std::size_t> current;

    auto intersect_neighbors = [&](const std::vector<std::size_t>& set, std::size_t v) {
        std::vector<std::size_t> out;
        for (std::size_t u : set)
            if (g.has_edge(u, v)) out.push_back(u);
        return out;
    };

    std::function<void(std::vector<std::size_t>, std::vector<std::size_t>)> expand =
        [&](std::vector<std::size_t> p, std::vector<std::size_t> x) {
            if (p.empty() && x.empty()) {
                if (current.size() > best.size()) best = current;
                return;
            }
            if (current.size() + p.size() <= best.size()) return;
            std::size_t pivot = n;
            std::size_t pivot_count = 0;
            for (const auto* set : {&p, &x})
                for (std::size_t u : *set) {
                    std::size_t cnt = 0;
                    for (std::size_t w : p)
                        if (g.has_edge(u, w)) ++cnt;
                    if (pivot == n || cnt > pivot_count) {
                        pivot = u;
                        pivot_count = cnt;
                    }
                }
            const std::vector<std::size_t> candidates = p;
            for (std::size_t v : candidates) {
                if (pivot < n && g.has_edge(pivot, v)) continue;
                current.push_back(v);
                expand(intersect_neighbors(p, v), intersect_neighbors(x, v));
                current.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.insert(std::lower_bound(x.begin(), x.end(), v), v);
            }
        };

    std::vector<std::size_t> p(n);
    for (std::size_t v = 0; v < n; ++v) p[v] = v;
    expand(std::move(p), {});
    std::sort(best.begin(), best.end());
    if (!is_clique(g, best))
        throw std::logic_error("max_clique_exact: result is not a clique (bug)");
    return best;
}

// First satisfying assignment in lexicographic order over (x_1, ..., x_n)
// with false < true, or nothing. Hard limit of 24 variables.
inline std::optional<std::vector<bool>> exhaustive_sat(const CnfFormula& f) {
    if (f.num_vars > 24)
        throw std::invalid_argument("exhaustive_sat: more than 24 variables");
    f.validate();
    const std::size_t n = f.num_vars;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
        std::vector<bool> assignment(n);
        for (std::size_t j = 0; j < n; ++j) assignment[j] = (word >> (n - 1 - j)) & 1;
        if (satisfies(f, assignment)) return assignment;
    }
    return std::nullopt;
}

} // namespace oracle
} // namespace grif
