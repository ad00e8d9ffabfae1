#pragma once

#include <cstdint>

namespace tritail {

// SplitMix64 (Steele/Lea/Flood; Vigna's fixed-increment variant).
// One 64-bit word of state, passes BigCrush, and cheap enough to create
// per trial, which is how independent streams are made here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits. Never returns 1.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound) by rejection-free multiply-shift; bias is
    // negligible for the bounds used here (bound << 2^64).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

// Stationary 64-bit finalizer (MurmurHash3 / splitmix output function).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdULL;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return z ^ (z >> 33);
}

// Seed for the independent stream `stream` of a run keyed by `seed`.
// Counter-based: stream i never touches stream j's draws, so trials can be
// assigned to any number of workers without changing results.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

}  // namespace tritail
