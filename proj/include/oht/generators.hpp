#pragma once

#include <cstdint>
#include <vector>

#include "oht/dyadic.hpp"
#include "oht/rng.hpp"
#include "oht/signal.hpp"

// Deterministic input-signal generators for the experiment suites.  All
// draws are counter-based, so a (seed, trial) pair pins the signal exactly.

namespace oht::gen {

/// Nonnegative test profile on I0: a baseline in [0.5, 1] plus a few
/// dyadic-aligned rectangular bumps.  Bump heights stay below 16x the
/// baseline floor, so ||f||_inf <= 32 <f>_{I0}; stopping intervals at
/// threshold 10 still occur regularly.
inline FiniteSignal bumpy_profile(const DyadicInterval& I0, std::uint64_t seed) {
    rng::Stream gen(seed);
    std::vector<cplx> v(std::size_t(I0.length()));
    for (auto& z : v) z = gen.uniform(0.5, 1.0);
    const int bumps = int(gen.uniform_int(1, 4));
    for (int b = 0; b < bumps; ++b) {
        const int level = int(gen.uniform_int(4, std::min(8, I0.level - 2)));
        const std::int64_t len = std::int64_t(1) << level;
        const std::int64_t cells = I0.length() / len;
        const std::int64_t cell = gen.uniform_int(0, cells - 1);
        const double height = gen.uniform(8.0, 15.0);
        for (std::int64_t x = cell * len; x < (cell + 1) * len; ++x)
            v[std::size_t(x)] += height;
    }
    return FiniteSignal(I0.begin(), std::move(v));
}

/// Sparser nonnegative profile: scattered mass with occasional moderate
/// plateaus and stretches of zeros.
inline FiniteSignal scattered_profile(const DyadicInterval& I0, std::uint64_t seed) {
    rng::Stream gen(seed);
    std::vector<cplx> v(std::size_t(I0.length()));
    for (auto& z : v)
        if (gen.chance(0.35)) z = gen.uniform(0.0, 1.0);
    const int plateaus = int(gen.uniform_int(0, 3));
    for (int b = 0; b < plateaus; ++b) {
        const std::int64_t len = gen.uniform_int(16, 128);
        const std::int64_t at = gen.uniform_int(0, I0.length() - len);
        const double height = gen.uniform(2.0, 10.0);
        for (std::int64_t x = at; x < at + len; ++x)
            v[std::size_t(x)] += height;
    }
    return FiniteSignal(I0.begin(), std::move(v));
}

/// Nonnegative profile whose bad part is spiky at several stopping scales:
/// a moderate baseline plus well-separated point spikes of height
/// ~13 * 2^L for L in {4,5,6}.  Each spike is tall enough to stop exactly
/// at level L and far enough from the others that no larger interval
/// merges them, so the decomposition carries several b-levels at once.
inline FiniteSignal multiscale_spikes(const DyadicInterval& I0, std::uint64_t seed) {
    rng::Stream gen(seed);
    std::vector<cplx> v(std::size_t(I0.length()));
    for (auto& z : v) z = gen.uniform(0.4, 0.6);
    const std::int64_t quarter = I0.length() / 4;
    for (int L = 4; L <= 6; ++L) {
        const std::int64_t at = std::int64_t(L - 4) * quarter + gen.uniform_int(0, quarter - 1);
        v[std::size_t(at)] += 13.0 * double(std::int64_t(1) << L) * gen.uniform(0.9, 1.1);
    }
    return FiniteSignal(I0.begin(), std::move(v));
}

/// Randomized variant: a low baseline with six point spikes, two per level
/// in {4,5,6}, at uniform positions.  Stopping levels vary with collisions.
inline FiniteSignal spike_mix(const DyadicInterval& I0, std::uint64_t seed) {
    rng::Stream gen(seed);
    std::vector<cplx> v(std::size_t(I0.length()));
    for (auto& z : v) z = gen.uniform(0.2, 0.3);
    const int levels[6] = {4, 4, 5, 5, 6, 6};
    for (const int L : levels) {
        const std::int64_t at = gen.uniform_int(0, I0.length() - 1);
        v[std::size_t(at)] += 13.0 * double(std::int64_t(1) << L) * gen.uniform(0.9, 1.1);
    }
    return FiniteSignal(I0.begin(), std::move(v));
}

/// Complex signal with mixed structure for oracle-equivalence tests.
inline FiniteSignal complex_signal(std::int64_t start, std::int64_t max_support, std::uint64_t seed) {
    rng::Stream gen(seed);
    const std::int64_t n = gen.uniform_int(1, max_support);
    std::vector<cplx> v(static_cast<std::size_t>(n));
    const int shape = int(gen.uniform_int(0, 2));
    for (auto& z : v) {
        if (shape == 0) z = cplx(double(gen.sign()), 0.0);
        else if (shape == 1) z = cplx(gen.uniform(-1, 1), gen.uniform(-1, 1));
        else if (gen.chance(0.1)) z = cplx(gen.uniform(-4, 4), gen.uniform(-4, 4));
    }
    return FiniteSignal(start, std::move(v));
}

} // namespace oht::gen
