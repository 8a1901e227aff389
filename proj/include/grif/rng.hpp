#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace grif {

// Deterministic 64-bit generator (splitmix64). Everything randomized in the
// library draws from this so that a seed reproduces a run bit-for-bit on any
// platform; the standard <random> distributions are implementation-defined
// and would break that.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased integer in [0, bound) via mask-and-reject.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t mask = std::bit_ceil(bound) - 1;
        for (;;) {
            const std::uint64_t v = next() & mask;
            if (v < bound) return v;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return real01() < p; }

    // Independent stream for a sub-task; mixing the salt through next()
    // keeps child streams unrelated for nearby salts.
    Rng child(std::uint64_t salt) {
        Rng seeder(state_ ^ (salt * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
        return Rng(seeder.next());
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Uniform field element.
    template <class F>
    F uniform() {
        return F(below(F::modulus));
    }

private:
    std::uint64_t state_;
};

} // namespace grif
