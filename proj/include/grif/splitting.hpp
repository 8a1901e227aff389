#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "grif/matrix.hpp"

namespace grif {

// Which algebra product closes the span of the indicators:
//   symmetric  X * Y = XY + YX
//   standard   X * Y = XY
enum class ProductKind { symmetric, standard };

// Splitting of a matrix M = sum alpha_u H_u into its distinct entry values
// (ascending) and their 0,1 indicator matrices. Supports are disjoint by
// construction and cover all n^2 cells.
template <class F>
struct SplittingBasis {
    std::vector<F> alphas;
    std::vector<FieldMatrix<F>> indicators;
    ProductKind product_kind = ProductKind::symmetric;

    std::size_t size() const { return alphas.size(); }
    std::size_t dim() const { return indicators.empty() ? 0 : indicators.front().dim(); }
};

// d[v,w,u] with H_v * H_w = sum_u d[v,w,u] H_u when closed. Stored sparse
// as sorted (key, value) pairs with key = (v*m + w)*m + u: splittings of
// generic graphs stabilize all-singleton (m = n^2), where a dense tensor
// would be Theta(n^6) cells while at most n^3 constants are nonzero. On a
// closure failure `witness` pins the first cell where the product is not
// constant on an indicator's support.
template <class F>
struct StructureConstants {
    struct Witness {
        std::size_t v, w, u;
        std::size_t row, col;   // cell inside H_u's support
        F expected, found;      // value at the support's first cell vs here
    };

    struct Entry {
        std::uint64_t key;
        F value;
        friend bool operator==(const Entry& a, const Entry& b) {
            return a.key == b.key && a.value == b.value;
        }
    };

    std::size_t m = 0;
    std::vector<Entry> d;       // sorted by key; absent means zero
    bool closed = true;
    std::optional<Witness> witness;

    std::uint64_t key_of(std::size_t v, std::size_t w, std::size_t u) const {
        return (static_cast<std::uint64_t>(v) * m + w) * m + u;
    }

    F at(std::size_t v, std::size_t w, std::size_t u) const {
        const std::uint64_t key = key_of(v, w, u);
        const auto it = std::lower_bound(
            d.begin(), d.end(), key,
            [](const Entry& e, std::uint64_t k) { return e.key < k; });
        return it != d.end() && it->key == key ? it->value : F::zero();
    }

    bool commutative() const {
        for (const Entry& e : d) {
            const std::size_t u = e.key % m, w = (e.key / m) % m, v = e.key / m / m;
            if (e.value != at(w, v, u)) return false;
        }
        return true;
    }

    friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
        return a.m == b.m && a.closed == b.closed && a.d == b.d;
    }
};

template <class F>
SplittingBasis<F> extract_splitting(const FieldMatrix<F>& m,
                                    ProductKind kind = ProductKind::symmetric) {
    SplittingBasis<F> s;
    s.product_kind = kind;
    s.alphas = multispectrum(m).spectrum();
    s.indicators.reserve(s.alphas.size());
    for (const F& a : s.alphas) {
        FieldMatrix<F> h(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j)
                if (m(i, j) == a) h(i, j) = F::one();
        s.indicators.push_back(std::move(h));
    }
    return s;
}

// Row-major cell indices of each indicator's support.
template <class F>
std::vector<std::vector<std::size_t>> supports(const SplittingBasis<F>& s) {
    const std::size_t n = s.dim();
    std::vector<std::vector<std::size_t>> out(s.size());
    for (std::size_t u = 0; u < s.size(); ++u)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (s.indicators[u](i, j) == F::one()) out[u].push_back(i * n + j);
    return out;
}

// Coefficients of X in span{H_u}, i.e. X constant on every support; empty
// when X leaves the span. Supports partition the cells, so the coefficient
// on H_u is just X's value there.
template <class F>
std::optional<std::vector<F>> in_span(const SplittingBasis<F>& s, const FieldMatrix<F>& x) {
    const std::size_t n = s.dim();
    if (x.dim() != n) return std::nullopt;
    std::vector<F> coeffs(s.size());
    for (std::size_t u = 0; u < s.size(); ++u) {
        bool first = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (s.indicators[u](i, j) != F::one()) continue;
                if (first) {
                    coeffs[u] = x(i, j);
                    first = false;
                } else if (x(i, j) != coeffs[u]) {
                    return std::nullopt;
                }
            }
    }
    return coeffs;
}

namespace detail {

// Paths i -> k -> j with (i,k) in H_v's support and (k,j) in H_w's, i.e.
// (H_v H_w)(i, j); plus the reversed product for the symmetric kind.
inline std::uint64_t product_cell(const std::vector<std::uint32_t>& cls, std::size_t n,
                                  std::size_t v, std::size_t w, std::size_t i, std::size_t j,
                                  bool symmetric) {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t a = cls[i * n + k], b = cls[k * n + j];
        if (a == v && b == w) ++c;
        if (symmetric && a == w && b == v) ++c;
    }
    return c;
}

} // namespace detail

// Exploits the support partition: a product H_v H_w is in the span exactly
// when it is constant on every support, and every path i -> k -> j lands in
// exactly one ordered pair (class(i,k), class(k,j)). One pass over cells and
// middle indices covers all m^2 products at once.
template <class F>
StructureConstants<F> structure_constants(const SplittingBasis<F>& s) {
    const std::size_t m = s.size(), n = s.dim();
    StructureConstants<F> sc;
    sc.m = m;
    if (m == 0 || n == 0) return sc;
    const bool symmetric = s.product_kind == ProductKind::symmetric;

    std::vector<std::uint32_t> cls(n * n);
    const auto supp = supports(s);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t cell : supp[u]) cls[cell] = static_cast<std::uint32_t>(u);

    // Per-support scratch over ordered pair keys v*m + w.
    std::vector<std::uint64_t> value(m * m, 0);
    std::vector<std::size_t> nonzero_cells(m * m, 0);
    std::vector<std::uint8_t> conflict(m * m, 0);
    std::vector<std::size_t> touched;
    std::vector<std::pair<std::size_t, std::uint64_t>> counts;  // this cell's pair counts

    for (std::size_t u = 0; u < m; ++u) {
        touched.clear();
        for (std::size_t cell : supp[u]) {
            const std::size_t i = cell / n, j = cell % n;
            counts.clear();
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t key = cls[i * n + k] * m + cls[k * n + j];
                bool found = false;
                for (auto& [ck, cv] : counts)
                    if (ck == key) {
                        ++cv;
                        found = true;
                        break;
                    }
                if (!found) counts.emplace_back(key, 1);
            }
            if (symmetric) {
                // Fold in the reversed product; make sure swapped keys exist.
                const std::size_t base = counts.size();
                for (std::size_t t = 0; t < base; ++t) {
                    const std::size_t key = counts[t].first;
                    const std::size_t swapped = (key % m) * m + key / m;
                    bool found = false;
                    for (const auto& [ck, cv] : counts)
                        if (ck == swapped) {
                            found = true;
                            break;
                        }
                    if (!found) counts.emplace_back(swapped, 0);
                }
                std::vector<std::pair<std::size_t, std::uint64_t>> folded;
                folded.reserve(counts.size());
                for (const auto& [key, cv] : counts) {
                    const std::size_t swapped = (key % m) * m + key / m;
                    std::uint64_t other = 0;
                    for (const auto& [ck, cv2] : counts)
                        if (ck == swapped) {
                            other = cv2;
                            break;
                        }
                    folded.emplace_back(key, cv + other);
                }
                counts.swap(folded);
            }
            for (const auto& [key, cv] : counts) {
                if (cv == 0) continue;
                if (nonzero_cells[key] == 0) {
                    value[key] = cv;
                    touched.push_back(key);
                } else if (value[key] != cv) {
                    conflict[key] = 1;
                }
                ++nonzero_cells[key];
            }
        }
        for (std::size_t key : touched) {
            const std::size_t v = key / m, w = key % m;
            if (!conflict[key] && nonzero_cells[key] == supp[u].size()) {
                sc.d.push_back({sc.key_of(v, w, u), F(value[key])});
            } else {
                // Non-constant on this support: record the first offending
                // cell against the value at the support's first cell.
                const std::size_t first = supp[u].front();
                const std::uint64_t expected = detail::product_cell(
                    cls, n, v, w, first / n, first % n, symmetric);
                if (expected != 0) sc.d.push_back({sc.key_of(v, w, u), F(expected)});
                if (sc.closed) {
                    for (std::size_t cell : supp[u]) {
                        const std::uint64_t got = detail::product_cell(
                            cls, n, v, w, cell / n, cell % n, symmetric);
                        if (got != expected) {
                            sc.closed = false;
                            sc.witness = {v, w, u, cell / n, cell % n, F(expected), F(got)};
                            break;
                        }
                    }
                }
            }
            value[key] = 0;
            nonzero_cells[key] = 0;
            conflict[key] = 0;
        }
    }
    std::sort(sc.d.begin(), sc.d.end(),
              [](const auto& a, const auto& b) { return a.key < b.key; });
    return sc;
}

// Identical algebras: same dimension and coefficients, both closed with the
// same constants, and supports of matching cardinality.
template <class F>
bool algebras_match(const SplittingBasis<F>& s1, const StructureConstants<F>& c1,
                    const SplittingBasis<F>& s2, const StructureConstants<F>& c2) {
    if (s1.product_kind != s2.product_kind) return false;
    if (s1.size() != s2.size() || s1.alphas != s2.alphas) return false;
    if (!c1.closed || !c2.closed || !(c1 == c2)) return false;
    const auto sup1 = supports(s1), sup2 = supports(s2);
    for (std::size_t u = 0; u < s1.size(); ++u)
        if (sup1[u].size() != sup2[u].size()) return false;
    return true;
}

template <class F>
bool algebras_match(const SplittingBasis<F>& s1, const SplittingBasis<F>& s2) {
    return algebras_match(s1, structure_constants(s1), s2, structure_constants(s2));
}

// sum x_u H_u.
template <class F>
FieldMatrix<F> random_element(const SplittingBasis<F>& s, const std::vector<F>& x) {
    if (x.size() != s.size())
        throw std::invalid_argument("random_element: coefficient count != basis size");
    FieldMatrix<F> out(s.dim());
    for (std::size_t u = 0; u < s.size(); ++u) {
        FieldMatrix<F> term = s.indicators[u];
        term *= x[u];
        out += term;
    }
    return out;
}

// Seed-independent content of a splitting: the cell partition and the
// structure constants, with the basis put in a canonical order (ascending
// first support cell). The alpha values themselves are images of the random
// coefficients and differ run to run.
template <class F>
struct SplittingSignature {
    std::vector<std::vector<std::size_t>> supports;
    StructureConstants<F> constants;

    friend bool operator==(const SplittingSignature& a, const SplittingSignature& b) {
        return a.supports == b.supports && a.constants == b.constants;
    }
};

template <class F>
SplittingSignature<F> splitting_signature(const SplittingBasis<F>& s) {
    const auto supp = supports(s);
    std::vector<std::size_t> order(s.size());
    for (std::size_t u = 0; u < s.size(); ++u) order[u] = u;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return supp[a].front() < supp[b].front(); });
    SplittingBasis<F> canon;
    canon.product_kind = s.product_kind;
    for (std::size_t u : order) {
        canon.alphas.push_back(s.alphas[u]);
        canon.indicators.push_back(s.indicators[u]);
    }
    return {supports(canon), structure_constants(canon)};
}

} // namespace grif
