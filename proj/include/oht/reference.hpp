#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "oht/dyadic.hpp"
#include "oht/kernel.hpp"
#include "oht/operators.hpp"
#include "oht/signal.hpp"

// Brute-force reference implementations.  These deliberately avoid the
// library's evaluation strategies (transform convolution, jump-point
// suffix maxima, scale-bucketed partial sums) so they can serve as
// independent checks in the test and verification suites.  Nothing here is
// used by the operational code paths.

namespace oht::reference {

/// Direct double-loop convolution over explicit index pairs.
inline FiniteSignal convolve_direct(const FiniteSignal& f, const FiniteSignal& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const std::int64_t lo = f.begin() + g.begin();
    const std::int64_t hi = (f.end() - 1) + (g.end() - 1);
    std::vector<cplx> out(std::size_t(hi - lo + 1));
    for (std::int64_t x = f.begin(); x < f.end(); ++x)
        for (std::int64_t y = g.begin(); y < g.end(); ++y)
            out[std::size_t(x + y - lo)] += f.at(x) * g.at(y);
    return FiniteSignal(lo, std::move(out));
}

/// mu_j * mu~_j by direct double sum over the block, no convolution code.
inline FiniteSignal diag_correlation_direct(const CoeffSequence& a, int j) {
    const std::int64_t lo = (std::int64_t(1) << (j - 1)) + 1;
    const std::int64_t hi = std::int64_t(1) << j;
    std::vector<cplx> coeff(std::size_t(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) coeff[std::size_t(n - lo)] = a(n) / double(n);
    // (mu_j * mu~_j)(x) = sum_n mu(n) conj(mu(n - x))
    const std::int64_t span = hi - lo;
    std::vector<cplx> out(std::size_t(2 * span + 1));
    for (std::int64_t x = -span; x <= span; ++x) {
        cplx s{};
        for (std::int64_t n = std::max(lo, lo + x); n <= std::min(hi, hi + x); ++n)
            s += coeff[std::size_t(n - lo)] * std::conj(coeff[std::size_t(n - x - lo)]);
        out[std::size_t(x + span)] = s;
    }
    return FiniteSignal(-span, std::move(out));
}

/// sup_{x != 0} |mu_j * mu~_j(x)| by the direct double sum.
inline double diag_sup_direct(const CoeffSequence& a, int j) {
    return diag_correlation_direct(a, j).sup_off_zero();
}

/// Maximal truncation by exhaustive sweep over every integer truncation
/// point N in [1, n_hi], not just the jumps of the tail.
inline FiniteSignal hilbert_maximal_bruteforce(const CoeffSequence& a, const FiniteSignal& f,
                                               IntWindow w) {
    if (f.is_zero() || w.length() <= 0) return {};
    std::vector<cplx> out(std::size_t(w.length()));
    for (std::int64_t x = w.begin; x < w.end; ++x) {
        const std::int64_t n_hi = x - f.begin();
        cplx tail{};
        double best = 0;
        for (std::int64_t N = n_hi; N >= 1; --N) {
            tail += a(N) / double(N) * f.at(x - N);
            best = std::max(best, std::abs(tail)); // tail sum starting at N
        }
        out[std::size_t(x - w.begin)] = best;
    }
    return FiniteSignal(w.begin, std::move(out));
}

/// T_I f directly from the definition, one output point at a time.
inline FiniteSignal apply_localized_direct(const DyadicInterval& I, const CoeffSequence& a,
                                           const FiniteSignal& f) {
    const int i = I.level - 3;
    const std::int64_t n_lo = (std::int64_t(1) << (i - 1)) + 1;
    const std::int64_t n_hi = std::int64_t(1) << i;
    const std::int64_t tilde_begin = I.begin() - (std::int64_t(1) << i);
    std::vector<cplx> out(std::size_t(I.length()));
    for (std::int64_t x = I.begin(); x < I.end(); ++x) {
        cplx s{};
        for (std::int64_t n = n_lo; n <= n_hi; ++n) {
            const std::int64_t y = x - n;
            if (y >= tilde_begin && y < I.end()) s += a(n) / double(n) * f.at(y);
        }
        out[std::size_t(x - I.begin())] = s;
    }
    return FiniteSignal(I.begin(), std::move(out));
}

/// Maximal truncated sum over the family by an explicit sweep over every
/// distinct threshold eps, recomputing each partial sum from scratch.
inline FiniteSignal t_star_direct(const TruncationFamily& fam, const CoeffSequence& a,
                                  const FiniteSignal& f) {
    if (fam.empty()) return {};
    std::set<std::int64_t> lengths;
    for (const auto& kv : fam.by_level()) lengths.insert(std::int64_t(1) << kv.first);

    const IntWindow w = fam.bounding_window();
    std::vector<double> best(std::size_t(w.length()), 0.0);
    for (const std::int64_t eps : lengths) {
        // partial sum over |I| <= eps (thresholds between scales give the
        // same sums; ties within a scale enter together)
        std::vector<cplx> sum(std::size_t(w.length()));
        for (const auto& [level, intervals] : fam.by_level()) {
            if ((std::int64_t(1) << level) > eps) continue;
            for (const auto& I : intervals) {
                const FiniteSignal piece = apply_localized_direct(I, a, f);
                for (std::int64_t x = piece.begin(); x < piece.end(); ++x)
                    sum[std::size_t(x - w.begin)] += piece.at(x);
            }
        }
        for (std::size_t i = 0; i < sum.size(); ++i)
            best[i] = std::max(best[i], std::abs(sum[i]));
    }
    std::vector<cplx> out(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) out[i] = best[i];
    return FiniteSignal(w.begin, std::move(out));
}

/// Maximal dyadic subintervals of root with average >= cut, by exhaustive
/// scan over every dyadic subinterval.
inline std::vector<DyadicInterval> maximal_stopping_scan(const FiniteSignal& f,
                                                         const DyadicInterval& root, double cut) {
    std::vector<DyadicInterval> qualifying;
    for (int level = kMinDyadicLevel; level < root.level; ++level)
        for (const auto& J : scale_partition(level, root.offset, root.begin(), root.end()))
            if (root.contains(J) && average(f, J) >= cut) qualifying.push_back(J);
    std::vector<DyadicInterval> maximal;
    for (const auto& J : qualifying) {
        bool dominated = false;
        for (const auto& K : qualifying)
            if (!(K == J) && K.contains(J)) { dominated = true; break; }
        if (!dominated) maximal.push_back(J);
    }
    std::sort(maximal.begin(), maximal.end(), [](const DyadicInterval& a, const DyadicInterval& b) {
        return a.begin() < b.begin();
    });
    return maximal;
}

/// Pointwise running maximum max_{1 <= n <= N} | sum_{j <= n} phi_j |.
inline FiniteSignal running_max_prefix(const std::vector<FiniteSignal>& phis) {
    FiniteSignal acc;
    std::int64_t lo = 0, hi = 1;
    bool first = true;
    for (const auto& phi : phis) {
        if (phi.is_zero()) continue;
        if (first) { lo = phi.begin(); hi = phi.end(); first = false; }
        lo = std::min(lo, phi.begin());
        hi = std::max(hi, phi.end());
    }
    std::vector<double> best(std::size_t(hi - lo), 0.0);
    std::vector<cplx> run(std::size_t(hi - lo));
    for (const auto& phi : phis) {
        for (std::int64_t x = phi.begin(); x < phi.end(); ++x)
            run[std::size_t(x - lo)] += phi.at(x);
        for (std::size_t i = 0; i < run.size(); ++i)
            best[i] = std::max(best[i], std::abs(run[i]));
    }
    std::vector<cplx> out(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) out[i] = best[i];
    return FiniteSignal(lo, std::move(out));
}

} // namespace oht::reference
