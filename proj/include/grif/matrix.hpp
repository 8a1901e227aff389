#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "grif/field.hpp"
#include "grif/permutation.hpp"

namespace grif {

// Dense square matrix over a prime field, row-major. All arithmetic is exact.
template <class F>
class FieldMatrix {
public:
    FieldMatrix() = default;
    explicit FieldMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static FieldMatrix identity(std::size_t n) {
        FieldMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    // J_n, the all-ones matrix.
    static FieldMatrix ones(std::size_t n) {
        FieldMatrix m(n);
        for (auto& v : m.data_) v = F::one();
        return m;
    }

    std::size_t dim() const { return n_; }

    F& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const F> cells() const { return data_; }

    FieldMatrix& operator+=(const FieldMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    FieldMatrix& operator-=(const FieldMatrix& o) {
        check_same_dim(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    FieldMatrix& operator*=(F s) {
        for (auto& v : data_) v *= s;
        return *this;
    }

    friend FieldMatrix operator+(FieldMatrix a, const FieldMatrix& b) { return a += b; }
    friend FieldMatrix operator-(FieldMatrix a, const FieldMatrix& b) { return a -= b; }
    friend FieldMatrix operator*(F s, FieldMatrix m) { return m *= s; }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        a.check_same_dim(b);
        const std::size_t n = a.n_;
        FieldMatrix out(n);
        // Accumulate 128-bit partial sums; with a < 2^61 modulus, 32 products
        // fit before a fold is required.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                unsigned __int128 acc = 0;
                std::size_t pending = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    acc += static_cast<unsigned __int128>(a(i, k).value()) * b(k, j).value();
                    if (++pending == 32) {
                        acc = F::reduce128(acc);
                        pending = 0;
                    }
                }
                out(i, j) = F(F::reduce128(acc));
            }
        }
        return out;
    }

    FieldMatrix transpose() const {
        FieldMatrix out(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    FieldMatrix pow(std::size_t e) const {
        FieldMatrix base = *this, acc = identity(n_);
        while (e != 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
        return a.n_ == b.n_ && a.data_ == b.data_;
    }

private:
    void check_same_dim(const FieldMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("FieldMatrix: dimension mismatch");
    }

    std::size_t n_ = 0;
    std::vector<F> data_;
};

// Entry multi-spectrum MSp: value -> multiplicity over all n^2 cells,
// diagonal included. spectrum() is Sp, the keys in ascending order.
template <class F>
struct MultiSpectrum {
    std::map<F, std::size_t> counts;

    std::vector<F> spectrum() const {
        std::vector<F> keys;
        keys.reserve(counts.size());
        for (const auto& [v, c] : counts) keys.push_back(v);
        return keys;
    }

    std::size_t distinct() const { return counts.size(); }

    friend bool operator==(const MultiSpectrum& a, const MultiSpectrum& b) {
        return a.counts == b.counts;
    }
};

template <class F>
MultiSpectrum<F> multispectrum(const FieldMatrix<F>& m) {
    MultiSpectrum<F> sp;
    for (const F& v : m.cells()) ++sp.counts[v];
    return sp;
}

template <class F>
std::size_t spectrum_size(const FieldMatrix<F>& m) {
    return multispectrum(m).distinct();
}

// I_pi M I_pi^T: cell (i, j) moves to (pi(i), pi(j)).
template <class F>
FieldMatrix<F> permute_conjugate(const FieldMatrix<F>& m, const Permutation& pi) {
    if (pi.size() != m.dim())
        throw std::invalid_argument("permute_conjugate: permutation length mismatch");
    FieldMatrix<F> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(pi(i), pi(j)) = m(i, j);
    return out;
}

// Sum coeffs[k] M^k by Horner; coeffs.size()-1 matrix multiplications.
// Refinement samples coefficients of length n (degree n-1), but any nonempty
// coefficient sequence evaluates.
template <class F>
FieldMatrix<F> poly_eval(std::span<const F> coeffs, const FieldMatrix<F>& m) {
    if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
    const std::size_t n = m.dim();
    FieldMatrix<F> acc(n);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs[k];
    }
    return acc;
}

template <class F>
FieldMatrix<F> poly_eval(const std::vector<F>& coeffs, const FieldMatrix<F>& m) {
    return poly_eval(std::span<const F>(coeffs), m);
}

} // namespace grif
