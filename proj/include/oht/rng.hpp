#pragma once

#include <cstdint>

// Counter-based deterministic random numbers.  Every random quantity in the
// library is a pure function of (seed, counter), so realizations are
// random-access and runs are reproducible bit-for-bit regardless of
// evaluation order or thread count.

namespace oht::rng {

inline std::uint64_t mix64(std::uint64_t x) noexcept {
    // splitmix64 finalizer
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix64(seed + 0x9E3779B97F4A7C15ull * (counter + 1));
}

/// Uniform double in [0, 1) from (seed, counter).
inline double unit(std::uint64_t seed, std::uint64_t counter) noexcept {
    return double(key(seed, counter) >> 11) * 0x1.0p-53;
}

/// Derive an independent stream seed.
inline std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ull));
}

/// Small sequential generator for test-signal construction.
struct Stream {
    std::uint64_t seed;
    std::uint64_t counter = 0;

    explicit Stream(std::uint64_t s) : seed(s) {}

    double unit() { return rng::unit(seed, counter++); }

    double uniform(double a, double b) { return a + (b - a) * unit(); }

    // inclusive bounds
    std::int64_t uniform_int(std::int64_t a, std::int64_t b) {
        return a + std::int64_t(unit() * double(b - a + 1));
    }

    int sign() { return unit() < 0.5 ? -1 : 1; }

    bool chance(double p) { return unit() < p; }
};

} // namespace oht::rng
