#pragma once

#include <cstdint>
#include <random>

namespace linemat {

// All randomness in the library flows through these helpers. std::mt19937_64
// output is specified bit-for-bit by the standard, and we avoid
// std::uniform_int_distribution (whose mapping is implementation-defined), so
// identical seeds give identical results on every platform.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for sub-experiment `i` of a user-visible seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t i) {
    return splitmix64(seed ^ splitmix64(i + 1));
}

// Uniform in [0, bound) by rejection; bound >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

// Uniform integer in [lo, hi], inclusive.
inline long long uniform_int(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

} // namespace linemat
