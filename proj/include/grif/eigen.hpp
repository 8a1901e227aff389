#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "grif/real_matrix.hpp"
#include "grif/simplex.hpp"

namespace grif {

// Eigenvalues grouped by multiplicity (within tolerance); each block holds
// the group's orthonormal eigenvectors as rows.
struct EigenDecomposition {
    struct Group {
        double eigenvalue;
        RealMatrix block;
    };
    std::vector<Group> groups;  // ascending eigenvalues
    double tol;

    std::size_t dimension() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.block.rows();
        return n;
    }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol * ||M||_F. Eigenvalues within tol * ||M||_F of their neighbor are
// grouped into one block.
inline EigenDecomposition symmetric_eigendecompose(const RealMatrix& m, double tol = 1e-8) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("symmetric_eigendecompose: matrix not square");
    const double scale = std::max(m.max_abs(), 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol * scale)
                throw std::invalid_argument("symmetric_eigendecompose: matrix not symmetric");

    RealMatrix a = m, v = RealMatrix::identity(n);
    const double norm = std::max(m.frobenius_norm(), 1e-300);
    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    // One extra sweep after crossing the threshold: convergence is quadratic,
    // so the trailing sweep pushes the off-diagonal mass far below tol * ||M||.
    bool final_sweep = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() < tol * norm) {
            if (final_sweep) break;
            final_sweep = true;
        }
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

    EigenDecomposition dec;
    dec.tol = tol;
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && a(order[end], order[end]) - a(order[end - 1], order[end - 1]) <= tol * norm)
            ++end;
        RealMatrix block(end - start, n);
        double lambda = 0.0;
        for (std::size_t r = start; r < end; ++r) {
            lambda += a(order[r], order[r]);
            for (std::size_t k = 0; k < n; ++k) block(r - start, k) = v(k, order[r]);
        }
        dec.groups.push_back({lambda / static_cast<double>(end - start), std::move(block)});
        start = end;
    }
    return dec;
}

// || sum_k lambda_k P_k^T P_k - M ||_F, the reconstruction residual.
inline double reconstruction_residual(const EigenDecomposition& dec, const RealMatrix& m) {
    RealMatrix acc(m.rows(), m.cols());
    for (const auto& g : dec.groups) {
        const RealMatrix outer = g.block.transpose() * g.block;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) acc(i, j) += g.eigenvalue * outer(i, j);
    }
    return (acc - m).frobenius_norm();
}

// Stack the selected groups' eigenvector rows.
inline RealMatrix stack_groups(const EigenDecomposition& dec, std::span<const std::size_t> which) {
    std::size_t rows = 0, cols = 0;
    for (std::size_t g : which) {
        if (g >= dec.groups.size()) throw std::invalid_argument("stack_groups: group out of range");
        rows += dec.groups[g].block.rows();
        cols = dec.groups[g].block.cols();
    }
    RealMatrix b(rows, cols);
    std::size_t r = 0;
    for (std::size_t g : which) {
        const RealMatrix& blk = dec.groups[g].block;
        for (std::size_t i = 0; i < blk.rows(); ++i, ++r)
            for (std::size_t j = 0; j < cols; ++j) b(r, j) = blk(i, j);
    }
    return b;
}

// LP-height of the stacked eigenvector rows of the chosen eigenvalue groups.
inline HeightVector eigenheight(const EigenDecomposition& dec,
                                std::span<const std::size_t> which, double tol = 1e-9) {
    return lp_height(stack_groups(dec, which), tol);
}

inline HeightVector eigenheight(const RealMatrix& m, std::span<const std::size_t> which,
                                double eig_tol = 1e-8, double lp_tol = 1e-9) {
    return eigenheight(symmetric_eigendecompose(m, eig_tol), which, lp_tol);
}

// M + c h h^T. h must be finite in every coordinate.
inline RealMatrix rank1_augment(const RealMatrix& m, const HeightVector& h, double c) {
    if (h.values.size() != m.rows() || m.rows() != m.cols())
        throw std::invalid_argument("rank1_augment: shape mismatch");
    if (!h.all_finite())
        throw std::invalid_argument("rank1_augment: height vector has an infinite coordinate");
    RealMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += c * h.values[i] * h.values[j];
    return out;
}

} // namespace grif
