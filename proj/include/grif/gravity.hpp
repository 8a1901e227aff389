#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grif/graph.hpp"

namespace grif {

// Parameters of the gravitational contraction. Defaults come from a
// parameter sweep against the exact oracle on random graphs and bounded CNF
// reductions: mild repulsion with a short, gentle integration keeps the
// geometry informative, while long strong contraction collapses the cloud
// and drowns the closest-pair signal.
struct GravityParams {
    double g = 1.0;      // gravitation coefficient
    double g1 = 0.3;     // anti-gravitation coefficient (0 disables repulsion)
    double s = 1.0;      // attraction distance exponent
    double s1 = 1.0;     // repulsion distance exponent
    double eps = 0.001;  // step scale
    std::size_t steps = 0;  // integration steps per round; 0 means 5 * n
    double d_min = 1e-6;    // distance clamp against force blow-up

    void validate() const {
        if (!(g > 0.0) || g1 < 0.0 || !(s > 0.0) || !(s1 > 0.0) || !(eps > 0.0) ||
            !(d_min > 0.0))
            throw std::invalid_argument("GravityParams: positivity constraints violated");
    }

    std::size_t steps_for(std::size_t n) const { return steps != 0 ? steps : 5 * n; }
};

// n points in R^n; column j is vertex j's position.
struct PointCloud {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::vector<double> coords;  // column-major: coords[j * dim + i]

    double& at(std::size_t i, std::size_t j) { return coords[j * dim + i]; }
    double at(std::size_t i, std::size_t j) const { return coords[j * dim + i]; }

    double distance(std::size_t j, std::size_t k) const {
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = at(i, j) - at(i, k);
            s += d * d;
        }
        return std::sqrt(s);
    }
};

// X^(0) = I_n.
inline PointCloud init_positions(std::size_t n) {
    if (n < 1) throw std::invalid_argument("init_positions: n must be at least 1");
    PointCloud x{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t j = 0; j < n; ++j) x.at(j, j) = 1.0;
    return x;
}

// One Euler step of the contraction dynamics. All columns update
// simultaneously from the previous positions: attraction g*eps/d^s along
// edges, repulsion g1*eps/d^s1 along non-edges when g1 > 0. Distances are
// clamped below by d_min before exponentiation.
inline PointCloud gravity_step(const PointCloud& x, const Graph& g, const GravityParams& p) {
    if (x.count != g.vertex_count())
        throw std::invalid_argument("gravity_step: cloud and graph sizes differ");
    const std::size_t n = x.count;
    PointCloud out = x;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) continue;
            const bool adjacent = g.has_edge(j, k);
            double w;
            if (adjacent) {
                const double d = std::max(x.distance(j, k), p.d_min);
                w = p.g * p.eps / std::pow(d, p.s);
            } else if (p.g1 > 0.0) {
                const double d = std::max(x.distance(j, k), p.d_min);
                w = -p.g1 * p.eps / std::pow(d, p.s1);
            } else {
                continue;
            }
            for (std::size_t i = 0; i < x.dim; ++i)
                out.at(i, j) += w * (x.at(i, k) - x.at(i, j));
        }
    }
    return out;
}

// Adjacent pair at minimal Euclidean distance; ties break to the
// lexicographically smallest (u, v). Empty when the graph has no edges.
inline std::optional<std::pair<std::size_t, std::size_t>> closest_adjacent_pair(
    const PointCloud& x, const Graph& g) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    double best_d = 0.0;
    for (auto [u, v] : g.edges()) {
        const double d = x.distance(u, v);
        if (!best || d < best_d) {
            best = {u, v};
            best_d = d;
        }
    }
    return best;
}

inline double min_edge_distance(const PointCloud& x, const Graph& g) {
    double best = std::numeric_limits<double>::infinity();
    for (auto [u, v] : g.edges()) best = std::min(best, x.distance(u, v));
    return best;
}

// Called after every integration step; round and step are 1-based.
using GravityObserver =
    std::function<void(std::size_t round, std::size_t step, const PointCloud&, double min_edge_dist,
                       const std::vector<std::size_t>& vertex_labels)>;

struct GravityRound {
    std::size_t round;
    std::size_t subgraph_size;
    std::pair<std::size_t, std::size_t> chosen;  // original vertex labels
    double min_distance;
};

struct CliqueRun {
    std::vector<std::size_t> clique;  // ascending original labels
    std::vector<GravityRound> rounds;
};

// Full heuristic: integrate the dynamics from I_m, take the closest adjacent
// pair into the clique, recurse on their common neighbors until the graph is
// empty, a single vertex, or edgeless. The result is verified to be a clique
// of the input graph before returning.
inline CliqueRun gravity_clique_run(const Graph& g, const GravityParams& p,
                                    const GravityObserver& observe = {}) {
    p.validate();
    CliqueRun run;
    std::vector<std::size_t> labels(g.vertex_count());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i;
    Graph cur = g;

    for (std::size_t round = 1; cur.vertex_count() > 0; ++round) {
        if (cur.vertex_count() == 1) {
            run.clique.push_back(labels[0]);
            break;
        }
        if (cur.edge_count() == 0) {
            run.clique.push_back(labels[0]);  // lowest-index isolated vertex
            break;
        }
        PointCloud x = init_positions(cur.vertex_count());
        const std::size_t q = p.steps_for(g.vertex_count());
        for (std::size_t step = 1; step <= q; ++step) {
            x = gravity_step(x, cur, p);
            if (observe) observe(round, step, x, min_edge_distance(x, cur), labels);
        }
        const auto pair = *closest_adjacent_pair(x, cur);
        run.rounds.push_back(
            {round, cur.vertex_count(), {labels[pair.first], labels[pair.second]},
             x.distance(pair.first, pair.second)});
        run.clique.push_back(labels[pair.first]);
        run.clique.push_back(labels[pair.second]);

        const std::vector<std::size_t> next = common_neighbors(cur, pair.first, pair.second);
        std::vector<std::size_t> next_labels;
        next_labels.reserve(next.size());
        for (std::size_t v : next) next_labels.push_back(labels[v]);
        cur = cur.induced(next);
        labels = std::move(next_labels);
    }

    std::sort(run.clique.begin(), run.clique.end());
    if (!is_clique(g, run.clique))
        throw std::logic_error("gravity_clique: accumulated set is not a clique (bug)");
    return run;
}

inline std::vector<std::size_t> gravity_clique(const Graph& g, const GravityParams& p) {
    return gravity_clique_run(g, p).clique;
}

} // namespace grif
