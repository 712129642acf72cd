#pragma once

#include <cstdint>

namespace pquad {

/// Small deterministic generator (splitmix64). Used everywhere randomness is
/// needed so that results are reproducible bit-for-bit across runs and
/// independent of the standard library's distribution implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept {
        return lo + uniform01() * (hi - lo);
    }

    /// Uniform index in [0, n).
    std::uint64_t index(std::uint64_t n) noexcept { return next() % n; }

private:
    std::uint64_t state_;
};

/// Derives an independent per-stream seed. Stream i of a run seeded with s
/// always sees the same substream, regardless of evaluation order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace pquad
