#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sobolev/sequence.hpp"

namespace sobolev {

/// Seeded generator whose outputs depend only on the seed, not on the
/// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::size_t index(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

/// Finite-support vector with 1..max_support distinct indices in [1, max_index]
/// and components uniform in [-1, 1].
CoefficientSequence random_finite_vector(Rng& rng, std::size_t max_support, std::size_t max_index);

} // namespace sobolev
