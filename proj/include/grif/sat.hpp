#pragma once

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "grif/graph.hpp"
#include "grif/gravity.hpp"
#include "grif/rng.hpp"

namespace grif {

// CNF with 1-based variables; a literal is +v or -v.
struct CnfFormula {
    std::size_t num_vars = 0;
    std::vector<std::vector<int>> clauses;

    void validate() const {
        for (const auto& clause : clauses) {
            if (clause.empty()) throw std::invalid_argument("CnfFormula: empty clause");
            for (std::size_t i = 0; i < clause.size(); ++i) {
                const int lit = clause[i];
                if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars)
                    throw std::invalid_argument("CnfFormula: literal out of range");
                for (std::size_t j = i + 1; j < clause.size(); ++j)
                    if (clause[j] == lit)
                        throw std::invalid_argument("CnfFormula: duplicate literal in clause");
            }
        }
    }
};

inline bool satisfies(const CnfFormula& f, const std::vector<bool>& assignment) {
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (int lit : clause) {
            const std::size_t v = static_cast<std::size_t>(std::abs(lit)) - 1;
            if (assignment[v] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

// Graph vertex -> (clause index, literal) for the reduction graph.
struct LiteralMap {
    std::vector<std::pair<std::size_t, int>> entries;
};

// One vertex per clause-literal occurrence; two occurrences are joined
// unless they share a clause or are opposite literals of one variable.
// The clique number equals the clause count iff the CNF is satisfiable.
inline std::pair<Graph, LiteralMap> cnf_to_graph(const CnfFormula& f) {
    f.validate();
    LiteralMap map;
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (int lit : f.clauses[c]) map.entries.emplace_back(c, lit);
    Graph g(map.entries.size());
    for (std::size_t a = 0; a < map.entries.size(); ++a)
        for (std::size_t b = a + 1; b < map.entries.size(); ++b) {
            const auto& [ca, la] = map.entries[a];
            const auto& [cb, lb] = map.entries[b];
            if (ca != cb && la != -lb) g.add_edge(a, b);
        }
    return {std::move(g), std::move(map)};
}

// A clause-count clique selects one literal per clause with no complementary
// pair; set those literals true, default the rest false. Undersized cliques
// decode to nothing.
inline std::optional<std::vector<bool>> decode_assignment(const std::vector<std::size_t>& clique,
                                                          const LiteralMap& map,
                                                          const CnfFormula& f) {
    if (clique.size() != f.clauses.size()) return std::nullopt;
    std::vector<bool> assignment(f.num_vars, false);
    for (std::size_t v : clique) {
        const int lit = map.entries.at(v).second;
        assignment[static_cast<std::size_t>(std::abs(lit)) - 1] = lit > 0;
    }
    if (!satisfies(f, assignment))
        throw std::logic_error("decode_assignment: clause-count clique decoded badly (bug)");
    return assignment;
}

struct SatResult {
    bool sat = false;                  // false means Unknown, never "unsat"
    std::vector<bool> assignment;      // verified when sat
    std::vector<std::size_t> clique;   // heuristic clique in the reduction graph
    std::vector<GravityRound> rounds;
};

// One-sided: Sat only with a verified assignment, otherwise Unknown.
inline SatResult sat_solve(const CnfFormula& f, const GravityParams& p) {
    auto [g, map] = cnf_to_graph(f);
    SatResult res;
    if (f.clauses.empty()) {
        res.sat = true;
        res.assignment.assign(f.num_vars, false);
        return res;
    }
    CliqueRun run = gravity_clique_run(g, p);
    res.clique = run.clique;
    res.rounds = std::move(run.rounds);
    if (auto assignment = decode_assignment(run.clique, map, f)) {
        res.sat = true;
        res.assignment = std::move(*assignment);
    }
    return res;
}

// Random CNF with clause sizes in [2, max_clause_size] (or 1 if forced) and
// every variable used at most max_occurrence times. May return fewer clauses
// than requested once the occurrence budget is exhausted.
inline CnfFormula random_cnf_bounded(std::size_t num_vars, std::size_t num_clauses,
                                     std::size_t max_clause_size, std::size_t max_occurrence,
                                     Rng& rng) {
    if (num_vars == 0 || max_clause_size == 0 || max_occurrence == 0)
        throw std::invalid_argument("random_cnf_bounded: zero parameter");
    CnfFormula f;
    f.num_vars = num_vars;
    std::vector<std::size_t> occ(num_vars, 0);
    for (std::size_t c = 0; c < num_clauses; ++c) {
        const std::size_t lo = max_clause_size >= 2 ? 2 : 1;
        const std::size_t want = lo + rng.below(max_clause_size - lo + 1);
        std::vector<int> clause;
        std::vector<bool> used(num_vars, false);
        for (std::size_t k = 0; k < want; ++k) {
            std::vector<std::size_t> avail;
            for (std::size_t v = 0; v < num_vars; ++v)
                if (!used[v] && occ[v] < max_occurrence) avail.push_back(v);
            if (avail.empty()) break;
            const std::size_t v = avail[rng.below(avail.size())];
            used[v] = true;
            ++occ[v];
            clause.push_back(rng.next() & 1 ? static_cast<int>(v + 1) : -static_cast<int>(v + 1));
        }
        if (clause.empty()) break;
        f.clauses.push_back(std::move(clause));
    }
    f.validate();
    return f;
}

// Exactly `clause_size` literals per clause and exactly `occurrence` uses of
// every variable, signs balanced per variable; the reduction graph of such a
// formula is regular. num_vars * occurrence must be divisible by clause_size.
// Pairing-model style with rejection, up to 100 attempts.
inline CnfFormula random_cnf_regular(std::size_t num_vars, std::size_t clause_size,
                                     std::size_t occurrence, Rng& rng) {
    if (num_vars == 0 || clause_size == 0 || occurrence % 2 != 0 ||
        (num_vars * occurrence) % clause_size != 0)
        throw std::invalid_argument(
            "random_cnf_regular: need even occurrence and clause_size | num_vars * occurrence");
    const std::size_t num_clauses = num_vars * occurrence / clause_size;
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<int> pool;
        for (std::size_t v = 1; v <= num_vars; ++v)
            for (std::size_t k = 0; k < occurrence; ++k)
                pool.push_back(k < occurrence / 2 ? static_cast<int>(v) : -static_cast<int>(v));
        rng.shuffle(pool);
        CnfFormula f;
        f.num_vars = num_vars;
        bool ok = true;
        for (std::size_t c = 0; c < num_clauses && ok; ++c) {
            std::vector<int> clause(pool.begin() + c * clause_size,
                                    pool.begin() + (c + 1) * clause_size);
            for (std::size_t i = 0; i < clause.size() && ok; ++i)
                for (std::size_t j = i + 1; j < clause.size(); ++j)
                    if (std::abs(clause[i]) == std::abs(clause[j])) {
                        ok = false;
                        break;
                    }
            if (ok) f.clauses.push_back(std::move(clause));
        }
        if (ok) {
            f.validate();
            return f;
        }
    }
    throw std::runtime_error("random_cnf_regular: no valid split found in 100 attempts");
}

} // namespace grif
