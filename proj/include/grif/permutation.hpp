#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "grif/rng.hpp"

namespace grif {

// Bijection on [0, n). images()[i] is where i is sent.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t v : images_) {
            if (v >= images_.size() || seen[v])
                throw std::invalid_argument("Permutation: images are not a bijection on [0, n)");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        std::iota(im.begin(), im.end(), std::size_t{0});
        return Permutation(std::move(im));
    }

    static Permutation random(std::size_t n, Rng& rng) {
        std::vector<std::size_t> im(n);
        std::iota(im.begin(), im.end(), std::size_t{0});
        rng.shuffle(im);
        return Permutation(std::move(im));
    }

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    Permutation inverse() const {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
        return Permutation(std::move(inv));
    }

    // (a * b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("Permutation: size mismatch in composition");
        std::vector<std::size_t> im(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) im[i] = a(b(i));
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }

private:
    std::vector<std::size_t> images_;
};

} // namespace grif
