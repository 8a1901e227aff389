#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grif/graph.hpp"
#include "grif/matrix.hpp"
#include "grif/rng.hpp"
#include "grif/splitting.hpp"

namespace grif {

struct SpectrumMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RefineMode { polynomial, metapolynomial };

// Exponents (r_1, ..., r_s) of a meta-power B^{r_1} J B^{r_2} J ... J B^{r_s}.
struct MetaDegree {
    std::vector<std::size_t> exponents;
};

struct RefineConfig {
    RefineMode mode = RefineMode::polynomial;
    std::size_t max_steps = 0;          // 0 means n^2
    std::size_t meta_terms = 3;         // meta-powers per meta-polynomial
    std::size_t meta_factor_bound = 3;  // bound on s per meta-power
    std::optional<std::vector<std::vector<std::size_t>>> partition;
    std::uint64_t seed = 0;

    void validate() const {
        if (meta_terms < 1 || meta_factor_bound < 1)
            throw std::invalid_argument("RefineConfig: meta parameters must be at least 1");
    }
};

enum class StepKind { diverged, continued, stabilized };

template <class F>
struct StepOutcome {
    StepKind kind = StepKind::diverged;
    std::size_t spectrum_size = 0;
    std::optional<std::pair<FieldMatrix<F>, FieldMatrix<F>>> matrices;
};

// Replace, in both matrices, every cell holding the j-th element of the
// shared ascending spectrum by y[j]. The multi-spectra must agree.
template <class F>
std::pair<FieldMatrix<F>, FieldMatrix<F>> substitute_spectrum(const FieldMatrix<F>& a,
                                                              const FieldMatrix<F>& b,
                                                              const std::vector<F>& y) {
    if (!(multispectrum(a) == multispectrum(b)))
        throw SpectrumMismatch("substitute_spectrum: entry multi-spectra differ");
    const std::vector<F> sp = multispectrum(a).spectrum();
    if (y.size() != sp.size())
        throw std::invalid_argument("substitute_spectrum: substitution vector length != |Sp|");
    std::map<F, F> repl;
    for (std::size_t j = 0; j < sp.size(); ++j) repl[sp[j]] = y[j];
    auto rewrite = [&](FieldMatrix<F> m) {
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) m(i, j) = repl.at(m(i, j));
        return m;
    };
    return {rewrite(a), rewrite(b)};
}

// J(V_1, ..., V_m): cell (i, j) is 1 iff i and j share a block. The blocks
// must partition [0, n) exactly.
template <class F>
FieldMatrix<F> build_partition_J(const std::vector<std::vector<std::size_t>>& partition,
                                 std::size_t n) {
    std::vector<std::size_t> block_of(n, n);
    std::size_t covered = 0;
    for (std::size_t k = 0; k < partition.size(); ++k)
        for (std::size_t v : partition[k]) {
            if (v >= n || block_of[v] != n)
                throw std::invalid_argument("build_partition_J: blocks overlap or leave [0, n)");
            block_of[v] = k;
            ++covered;
        }
    if (covered != n) throw std::invalid_argument("build_partition_J: blocks do not cover [0, n)");
    FieldMatrix<F> j(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (block_of[a] == block_of[b]) j(a, b) = F::one();
    return j;
}

// B^{r_1} J B^{r_2} J ... J B^{r_s} with B^0 = I. Refinement samples
// exponents within [0, n-1]; the product itself evaluates for any exponents.
template <class F>
FieldMatrix<F> meta_power(const FieldMatrix<F>& b, const MetaDegree& d, const FieldMatrix<F>& j) {
    if (d.exponents.empty()) throw std::invalid_argument("meta_power: empty meta-degree");
    FieldMatrix<F> acc = b.pow(d.exponents.front());
    for (std::size_t t = 1; t < d.exponents.size(); ++t) acc = acc * j * b.pow(d.exponents[t]);
    return acc;
}

template <class F>
FieldMatrix<F> meta_power(const FieldMatrix<F>& b, const MetaDegree& d) {
    return meta_power(b, d, FieldMatrix<F>::ones(b.dim()));
}

// One step's sampled randomness: the substitution vector plus either a random
// degree-(n-1) polynomial or a random meta-polynomial. Applying the same
// sample to both matrices of a pair is what makes the step an
// isomorphism-commuting transformation.
template <class F>
struct SampledStep {
    std::vector<F> substitution;
    std::vector<F> poly_coeffs;                     // polynomial mode
    std::vector<std::pair<F, MetaDegree>> meta;     // metapolynomial mode
};

template <class F>
SampledStep<F> sample_step(std::size_t spectrum_size, std::size_t n, const RefineConfig& cfg,
                           Rng& rng) {
    SampledStep<F> s;
    s.substitution.reserve(spectrum_size);
    for (std::size_t i = 0; i < spectrum_size; ++i) s.substitution.push_back(rng.uniform<F>());
    if (cfg.mode == RefineMode::polynomial) {
        s.poly_coeffs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) s.poly_coeffs.push_back(rng.uniform<F>());
    } else {
        for (std::size_t t = 0; t < cfg.meta_terms; ++t) {
            MetaDegree d;
            const std::size_t factors = 1 + rng.below(cfg.meta_factor_bound);
            for (std::size_t f = 0; f < factors; ++f)
                d.exponents.push_back(rng.below(n == 0 ? 1 : n));
            s.meta.emplace_back(rng.uniform<F>(), std::move(d));
        }
    }
    return s;
}

// Substitute by M's own ascending spectrum, then transform. Sized for |Sp(M)|.
template <class F>
FieldMatrix<F> apply_step(const SampledStep<F>& s, const FieldMatrix<F>& m,
                          const FieldMatrix<F>& j) {
    const std::vector<F> sp = multispectrum(m).spectrum();
    if (sp.size() != s.substitution.size())
        throw std::invalid_argument("apply_step: sample sized for a different spectrum");
    std::map<F, F> repl;
    for (std::size_t k = 0; k < sp.size(); ++k) repl[sp[k]] = s.substitution[k];
    FieldMatrix<F> sub(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < m.dim(); ++b) sub(a, b) = repl.at(m(a, b));
    if (!s.poly_coeffs.empty()) return poly_eval(s.poly_coeffs, sub);
    FieldMatrix<F> acc(m.dim());
    for (const auto& [coeff, degree] : s.meta) {
        FieldMatrix<F> term = meta_power(sub, degree, j);
        term *= coeff;
        acc += term;
    }
    return acc;
}

template <class F>
FieldMatrix<F> refine_J(const RefineConfig& cfg, std::size_t n) {
    return cfg.partition ? build_partition_J<F>(*cfg.partition, n) : FieldMatrix<F>::ones(n);
}

// One refinement step on a pair: diverge if the multi-spectra differ,
// otherwise draw one sample and apply it to both matrices.
template <class F>
StepOutcome<F> refine_step(const FieldMatrix<F>& a, const FieldMatrix<F>& b,
                           const RefineConfig& cfg, Rng& rng) {
    cfg.validate();
    if (a.dim() != b.dim()) throw std::invalid_argument("refine_step: dimension mismatch");
    const auto msp_a = multispectrum(a);
    if (!(msp_a == multispectrum(b))) return {StepKind::diverged, msp_a.distinct(), std::nullopt};
    const FieldMatrix<F> j = refine_J<F>(cfg, a.dim());
    const SampledStep<F> s = sample_step<F>(msp_a.distinct(), a.dim(), cfg, rng);
    FieldMatrix<F> a2 = apply_step(s, a, j);
    FieldMatrix<F> b2 = apply_step(s, b, j);
    const std::size_t size = spectrum_size(a2);
    return {StepKind::continued, size, std::make_pair(std::move(a2), std::move(b2))};
}

// One splitting-ring extension step: X Y + Z for random elements X, Y, Z of
// the current splitting's span, with the same coefficients applied to both
// matrices of a pair. The Z term keeps the previous partition alive, so the
// cell partition only refines; once |Sp| stops growing under these steps the
// span is closed under the standard matrix product as well.
template <class F>
struct RingStepSample {
    std::vector<F> x, y, z;
};

template <class F>
RingStepSample<F> sample_ring_step(std::size_t m, Rng& rng) {
    RingStepSample<F> s;
    for (auto* coeffs : {&s.x, &s.y, &s.z}) {
        coeffs->reserve(m);
        for (std::size_t u = 0; u < m; ++u) coeffs->push_back(rng.uniform<F>());
    }
    return s;
}

template <class F>
FieldMatrix<F> apply_ring_step(const RingStepSample<F>& s, const FieldMatrix<F>& m) {
    const SplittingBasis<F> basis = extract_splitting(m, ProductKind::standard);
    if (basis.size() != s.x.size())
        throw std::invalid_argument("apply_ring_step: sample sized for a different spectrum");
    return random_element(basis, s.x) * random_element(basis, s.y) + random_element(basis, s.z);
}

// Verification data attached to a stabilized run, per product kind.
template <class F>
struct AlgebraComparison {
    StructureConstants<F> constants1, constants2;
    bool match = false;
};

template <class F>
struct IsoVerdict {
    bool isomorphic = false;
    // Step index at which divergence was detected (0 = vertex-count
    // pre-check), or the number of transforms performed when stabilized.
    std::size_t steps = 0;
    std::vector<std::size_t> sp_history;
    std::size_t ring_history_start = 0;  // index where ring-step entries begin
    bool stabilized = false;

    // Present when stabilized: the commutative splitting algebra of the main
    // phase and the splitting ring of the product-extension phase.
    std::optional<SplittingBasis<F>> basis1, basis2;            // symmetric kind
    std::optional<SplittingBasis<F>> ring_basis1, ring_basis2;  // standard kind
    std::optional<AlgebraComparison<F>> symmetric, standard;
    bool meta_span_ok = true;        // metapolynomial mode: H_u J, J H_u in span
    bool indicators_symmetric = true;
    std::string note;
};

namespace detail {

template <class F>
bool basis_symmetric(const SplittingBasis<F>& s) {
    for (const auto& h : s.indicators)
        if (!(h == h.transpose())) return false;
    return true;
}

template <class F>
bool span_contains_J_products(const SplittingBasis<F>& s, const FieldMatrix<F>& j) {
    for (const auto& h : s.indicators)
        if (!in_span(s, h * j) || !in_span(s, j * h)) return false;
    return true;
}

} // namespace detail

// The full recursive scheme. Main phase: refine until the pair diverges or
// |Sp| stops growing; the final pair carries the commutative splitting
// algebra (symmetric product), verified as the algorithm's final action.
// Extension phase: keep refining with standard products of random algebra
// elements until |Sp| stalls again; that pair carries the splitting ring
// (standard product), verified the same way. A verification failure after
// stabilization downgrades the verdict to non-isomorphic (flagged in `note`).
template <class F>
IsoVerdict<F> iso_test(const Graph& g1, const Graph& g2, const RefineConfig& cfg) {
    cfg.validate();
    IsoVerdict<F> v;
    if (g1.vertex_count() != g2.vertex_count()) {
        v.steps = 0;
        v.note = "vertex counts differ";
        return v;
    }
    const std::size_t n = g1.vertex_count();
    const std::size_t max_steps = cfg.max_steps != 0 ? cfg.max_steps : n * n;
    FieldMatrix<F> a = g1.adjacency_matrix<F>();
    FieldMatrix<F> b = g2.adjacency_matrix<F>();
    Rng rng(cfg.seed);

    std::size_t transforms = 0;
    std::size_t prev = 0;
    bool have_prev = false;
    while (n > 0) {
        StepOutcome<F> out = refine_step(a, b, cfg, rng);
        if (out.kind == StepKind::diverged) {
            v.steps = transforms + 1;
            return v;
        }
        const std::size_t cur = spectrum_size(a);
        v.sp_history.push_back(cur);
        if (have_prev && cur <= prev) break;
        if (transforms >= max_steps) break;
        prev = cur;
        have_prev = true;
        a = std::move(out.matrices->first);
        b = std::move(out.matrices->second);
        ++transforms;
    }

    const FieldMatrix<F> a_main = a, b_main = b;
    v.ring_history_start = v.sp_history.size();

    std::size_t ring_prev = n > 0 ? spectrum_size(a) : 0;
    while (n > 0 && transforms < max_steps) {
        const auto msp_a = multispectrum(a);
        if (!(msp_a == multispectrum(b))) {
            v.steps = transforms + 1;
            return v;
        }
        const RingStepSample<F> s = sample_ring_step<F>(msp_a.distinct(), rng);
        FieldMatrix<F> a2 = apply_ring_step(s, a);
        FieldMatrix<F> b2 = apply_ring_step(s, b);
        const std::size_t cur = spectrum_size(a2);
        v.sp_history.push_back(cur);
        ++transforms;
        a = std::move(a2);
        b = std::move(b2);
        if (cur <= ring_prev) break;
        ring_prev = cur;
    }

    v.stabilized = true;
    v.steps = transforms;

    SplittingBasis<F> s1 = extract_splitting(a_main, ProductKind::symmetric);
    SplittingBasis<F> s2 = extract_splitting(b_main, ProductKind::symmetric);
    AlgebraComparison<F> sym{structure_constants(s1), structure_constants(s2), false};
    sym.match = algebras_match(s1, sym.constants1, s2, sym.constants2);

    SplittingBasis<F> r1 = extract_splitting(a, ProductKind::standard);
    SplittingBasis<F> r2 = extract_splitting(b, ProductKind::standard);
    AlgebraComparison<F> std_cmp{structure_constants(r1), structure_constants(r2), false};
    std_cmp.match = algebras_match(r1, std_cmp.constants1, r2, std_cmp.constants2);

    if (cfg.mode == RefineMode::metapolynomial) {
        const FieldMatrix<F> j = refine_J<F>(cfg, n);
        v.meta_span_ok = detail::span_contains_J_products(s1, j) &&
                         detail::span_contains_J_products(s2, j);
    }
    if (cfg.mode == RefineMode::polynomial && !g1.directed() && !g2.directed())
        v.indicators_symmetric = detail::basis_symmetric(s1) && detail::basis_symmetric(s2);

    v.isomorphic = sym.match && std_cmp.match;
    if (!v.isomorphic) v.note = "stabilized but splitting verification failed";
    v.basis1 = std::move(s1);
    v.basis2 = std::move(s2);
    v.ring_basis1 = std::move(r1);
    v.ring_basis2 = std::move(r2);
    v.symmetric = std::move(sym);
    v.standard = std::move(std_cmp);
    return v;
}

} // namespace grif
