#pragma once

#include <cstdint>

namespace steinberg {

/*
 * splitmix64. Trials seeded with the same 64-bit value reproduce the same
 * stream on every platform, so randomized reports are comparable across runs
 * and implementations.
 */
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace steinberg
