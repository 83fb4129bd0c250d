#pragma once

#include "qig/types.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace qig {

/// splitmix64 finalizer; used to derive independent sub-seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return mix_seed(a ^ mix_seed(b));
}

/// FNV-1a, so check names can be folded into seeds.
inline std::uint64_t hash_name(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random source. Gaussians are produced by an explicit
/// Box-Muller transform on mt19937_64 output so that streams are identical
/// across standard library implementations (std::normal_distribution is not
/// pinned down by the standard).
class Prng {
public:
    explicit Prng(std::uint64_t seed) : gen_(mix_seed(seed)) {}

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; one spare value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r  = std::sqrt(-2.0 * std::log1p(-u1));
        const double th = 2.0 * std::numbers::pi * u2;
        spare_     = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

    /// Standard complex Gaussian: E|z|^2 = 1.
    Complex complex_normal() {
        const double inv_sqrt2 = 0.7071067811865476;
        return Complex(normal() * inv_sqrt2, normal() * inv_sqrt2);
    }

    /// n-by-n matrix of independent standard complex Gaussians.
    Matrix ginibre(Eigen::Index n) {
        Matrix g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                g(i, j) = complex_normal();
        return g;
    }

    /// Random Hermitian matrix, entries O(1).
    Matrix hermitian(Eigen::Index n) {
        Matrix g = ginibre(n);
        return ((g + g.adjoint()) / 2.0).eval();
    }

    /// Random traceless Hermitian matrix, normalized to unit Frobenius norm.
    Matrix traceless_unit(Eigen::Index n) {
        Matrix h = hermitian(n);
        h -= (h.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
        return (h / h.norm()).eval();
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace qig
