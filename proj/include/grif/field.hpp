#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace grif {

// Prime-field scalar with a compile-time modulus.
//
// The working field is F_p with the Mersenne prime p = 2^61 - 1, which keeps
// every product reducible by two shift-and-add folds instead of a 128-bit
// division. Smaller (prime) moduli can be instantiated for exhaustive tests.
// `inverse` assumes the modulus is prime.
template <std::uint64_t Modulus>
class Fp {
    static_assert(Modulus >= 2, "modulus must be at least 2");
    static_assert(Modulus < (std::uint64_t{1} << 61),
                  "modulus must fit in 61 bits so products of 32 terms accumulate in 128 bits");

public:
    static constexpr std::uint64_t modulus = Modulus;
    static constexpr bool is_mersenne61 = (Modulus == (std::uint64_t{1} << 61) - 1);

    constexpr Fp() = default;
    constexpr explicit Fp(std::uint64_t v) : value_(v % Modulus) {}

    static constexpr Fp from_signed(long long v) {
        long long r = v % static_cast<long long>(Modulus);
        if (r < 0) r += static_cast<long long>(Modulus);
        return Fp(static_cast<std::uint64_t>(r));
    }

    static constexpr Fp zero() { return Fp(); }
    static constexpr Fp one() { return Fp(1); }

    constexpr std::uint64_t value() const { return value_; }

    constexpr Fp& operator+=(Fp o) {
        value_ += o.value_;
        if (value_ >= Modulus) value_ -= Modulus;
        return *this;
    }
    constexpr Fp& operator-=(Fp o) {
        value_ = (value_ >= o.value_) ? value_ - o.value_ : value_ + Modulus - o.value_;
        return *this;
    }
    constexpr Fp& operator*=(Fp o) {
        value_ = reduce128(static_cast<unsigned __int128>(value_) * o.value_);
        return *this;
    }

    friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
    friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
    friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
    constexpr Fp operator-() const { return value_ == 0 ? *this : Fp(Modulus - value_); }

    friend constexpr bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }
    friend constexpr bool operator!=(Fp a, Fp b) { return a.value_ != b.value_; }
    // Ordering is by integer representative; spectra sort with it.
    friend constexpr bool operator<(Fp a, Fp b) { return a.value_ < b.value_; }

    constexpr Fp pow(std::uint64_t e) const {
        Fp base = *this, acc = one();
        while (e != 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    constexpr Fp inverse() const {
        if (value_ == 0) throw std::domain_error("Fp::inverse: zero has no inverse");
        return pow(Modulus - 2);
    }

    // Reduces a sum of up to 32 products of 61-bit residues.
    static constexpr std::uint64_t reduce128(unsigned __int128 x) {
        if constexpr (is_mersenne61) {
            constexpr std::uint64_t mask = Modulus;
            std::uint64_t r = static_cast<std::uint64_t>(x & mask) +
                              static_cast<std::uint64_t>(x >> 61);
            r = (r & mask) + (r >> 61);
            if (r >= Modulus) r -= Modulus;
            return r;
        } else {
            return static_cast<std::uint64_t>(x % Modulus);
        }
    }

private:
    std::uint64_t value_ = 0;
};

// The default working field.
using F61 = Fp<(std::uint64_t{1} << 61) - 1>;

} // namespace grif
