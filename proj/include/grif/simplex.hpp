#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "grif/real_matrix.hpp"

namespace grif {

enum class LpStatus { optimal, unbounded, infeasible };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double value = 0.0;
    std::vector<double> x;
};

// Dense two-phase simplex with Bland's rule (lowest eligible index enters,
// lowest-index basic variable leaves on ties), so no cycling.
//
//   maximize c.x  subject to  A x <= b, x >= 0
//
// Column layout of the tableau: n structural, m slack, then any artificials.
class Simplex {
public:
    explicit Simplex(double eps = 1e-9) : eps_(eps) {}

    LpResult maximize(const RealMatrix& a, const std::vector<double>& b,
                      const std::vector<double>& c) const {
        const std::size_t m = a.rows(), n = a.cols();
        if (b.size() != m || c.size() != n)
            throw std::invalid_argument("Simplex: inconsistent dimensions");

        std::size_t artificial = 0;
        for (double bi : b)
            if (bi < -eps_) ++artificial;

        const std::size_t total = n + m + artificial;
        std::vector<std::vector<double>> t(m, std::vector<double>(total + 1, 0.0));
        std::vector<std::size_t> basis(m);

        std::size_t next_art = n + m;
        for (std::size_t i = 0; i < m; ++i) {
            const double sign = (b[i] < -eps_) ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a(i, j);
            t[i][n + i] = sign;
            t[i][total] = sign * b[i];
            if (sign < 0.0) {
                t[i][next_art] = 1.0;
                basis[i] = next_art++;
            } else {
                basis[i] = n + i;
            }
        }

        if (artificial > 0) {
            // Phase 1: minimize the sum of artificials.
            std::vector<double> cost(total, 0.0);
            for (std::size_t j = n + m; j < total; ++j) cost[j] = -1.0;
            if (!run(t, basis, cost, total)) return {LpStatus::infeasible, 0.0, {}};
            double art_sum = 0.0;
            for (std::size_t i = 0; i < m; ++i)
                if (basis[i] >= n + m) art_sum += t[i][total];
            if (art_sum > eps_) return {LpStatus::infeasible, 0.0, {}};
            // Pivot lingering zero-level artificials out of the basis.
            for (std::size_t i = 0; i < m; ++i) {
                if (basis[i] < n + m) continue;
                std::size_t enter = total;
                for (std::size_t j = 0; j < n + m; ++j)
                    if (std::abs(t[i][j]) > eps_) {
                        enter = j;
                        break;
                    }
                if (enter < total)
                    pivot(t, basis, i, enter, total);
                else
                    t[i][total] = 0.0;  // redundant row
            }
        }

        std::vector<double> cost(total, 0.0);
        for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
        for (std::size_t j = n + m; j < total; ++j)
            cost[j] = -std::numeric_limits<double>::infinity();  // keep artificials out
        if (!run(t, basis, cost, total)) return {LpStatus::unbounded, 0.0, {}};

        LpResult res;
        res.status = LpStatus::optimal;
        res.x.assign(n, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = t[i][total];
        for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
        return res;
    }

private:
    // Maximizes cost over the current tableau; false on unboundedness.
    bool run(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis,
             const std::vector<double>& cost, std::size_t total) const {
        const std::size_t m = t.size();
        for (;;) {
            std::vector<double> reduced(cost);
            for (std::size_t i = 0; i < m; ++i) {
                const double cb = cost[basis[i]];
                if (cb == 0.0 || std::isinf(cb)) continue;  // isinf: artificial stuck at zero
                for (std::size_t j = 0; j < total; ++j) reduced[j] -= cb * t[i][j];
            }
            std::size_t enter = total;
            for (std::size_t j = 0; j < total; ++j) {
                if (std::isinf(cost[j])) continue;
                bool basic = false;
                for (std::size_t i = 0; i < m; ++i)
                    if (basis[i] == j) basic = true;
                if (!basic && reduced[j] > eps_) {
                    enter = j;  // Bland: first eligible column
                    break;
                }
            }
            if (enter == total) return true;

            std::size_t leave = m;
            double best_ratio = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= eps_) continue;
                const double ratio = t[i][total] / t[i][enter];
                if (leave == m || ratio < best_ratio - eps_ ||
                    (std::abs(ratio - best_ratio) <= eps_ && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) return false;
            pivot(t, basis, leave, enter, total);
        }
    }

    void pivot(std::vector<std::vector<double>>& t, std::vector<std::size_t>& basis,
               std::size_t row, std::size_t col, std::size_t total) const {
        const double p = t[row][col];
        for (std::size_t j = 0; j <= total; ++j) t[row][j] /= p;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == row || t[i][col] == 0.0) continue;
            const double f = t[i][col];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[row][j];
        }
        basis[row] = col;
    }

    double eps_;
};

// Extended-real heights; unbounded coordinates carry +infinity.
struct HeightVector {
    std::vector<double> values;

    bool all_finite() const {
        for (double v : values)
            if (std::isinf(v)) return false;
        return true;
    }

    friend bool operator==(const HeightVector& a, const HeightVector& b) {
        return a.values == b.values;
    }
};

// height_j(B) = max x_j subject to B x <= B 1, x >= 0, for each column j.
// B must have full row rank.
inline HeightVector lp_height(const RealMatrix& b, double tol = 1e-9) {
    if (row_rank(b, tol) != b.rows())
        throw std::invalid_argument("lp_height: matrix does not have full row rank");
    const std::size_t m = b.rows(), n = b.cols();
    std::vector<double> rhs(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) rhs[i] += b(i, j);

    Simplex solver(tol);
    HeightVector h;
    h.values.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> c(n, 0.0);
        c[j] = 1.0;
        const LpResult r = solver.maximize(b, rhs, c);
        if (r.status == LpStatus::unbounded)
            h.values.push_back(std::numeric_limits<double>::infinity());
        else if (r.status == LpStatus::optimal)
            h.values.push_back(r.value);
        else
            throw std::logic_error("lp_height: x = 1 is feasible, LP cannot be infeasible");
    }
    return h;
}

} // namespace grif
