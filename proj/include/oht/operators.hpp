#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "oht/dyadic.hpp"
#include "oht/kernel.hpp"
#include "oht/report.hpp"
#include "oht/rng.hpp"
#include "oht/signal.hpp"

// The maximal truncation H*_a, its truncated tails, localized pieces T_I
// with exact per-scale reconstruction, maximal sums over interval families,
// and an empirical operator-norm probe.

namespace oht {

/// Half-open evaluation window [begin, end).  H*_a f has unbounded support
/// (the kernel tail decays like 1/x), so pointwise outputs are realized on
/// an explicit window.
struct IntWindow {
    std::int64_t begin = 0;
    std::int64_t end = 0;
    std::int64_t length() const noexcept { return end - begin; }
};

/// Window covering the support of f plus `mult` diameters to the right,
/// where the kernel pushes mass.
inline IntWindow natural_window(const FiniteSignal& f, std::int64_t mult = 4) {
    if (f.is_zero()) return {0, 1};
    const std::int64_t diam = std::max<std::int64_t>(std::int64_t(f.support_size()), 16);
    return {f.begin(), f.end() + mult * diam};
}

/// x -> sum_{n >= N} a(n)/n f(x-n), exact (the sum is finite for finitely
/// supported f), evaluated on the window.
inline FiniteSignal truncated_sum(const CoeffSequence& a, const FiniteSignal& f,
                                  std::int64_t N, IntWindow w) {
    if (N < 1) throw std::invalid_argument("truncated_sum: N >= 1 required");
    if (f.is_zero() || w.length() <= 0) return {};
    std::vector<cplx> out(std::size_t(w.length()));
    for (std::int64_t x = w.begin; x < w.end; ++x) {
        const std::int64_t n_lo = std::max<std::int64_t>(N, x - f.end() + 1);
        const std::int64_t n_hi = x - f.begin();
        cplx s{};
        for (std::int64_t n = n_lo; n <= n_hi; ++n)
            s += a(n) / double(n) * f.at(x - n);
        out[std::size_t(x - w.begin)] = s;
    }
    return FiniteSignal(w.begin, std::move(out));
}

/// H*_a f(x) = sup_{N >= 1} | sum_{n >= N} a(n)/n f(x-n) |.  Exact: tail
/// sums change only at the finitely many n with f(x-n) != 0, so the sup is
/// a max over suffix sums.
inline FiniteSignal hilbert_maximal(const CoeffSequence& a, const FiniteSignal& f, IntWindow w) {
    if (f.is_zero() || w.length() <= 0) return {};
    std::vector<cplx> out(std::size_t(w.length()));
    for (std::int64_t x = w.begin; x < w.end; ++x) {
        const std::int64_t n_lo = std::max<std::int64_t>(1, x - f.end() + 1);
        const std::int64_t n_hi = x - f.begin();
        cplx acc{};
        double best = 0;
        for (std::int64_t n = n_hi; n >= n_lo; --n) {
            const cplx fv = f.at(x - n);
            if (fv == cplx{}) continue;
            acc += a(n) / double(n) * fv;
            best = std::max(best, std::abs(acc));
        }
        out[std::size_t(x - w.begin)] = best;
    }
    return FiniteSignal(w.begin, std::move(out));
}

/// T_I f = 1_I . ( mu_i * (f 1_{I~}) ) with |I| = 2^{i+3} and I~ the
/// left-enlargement of I by |I|/8.  Output is supported on I and depends on
/// f only within I~; summing over one scale of a grid reconstructs mu_i * f
/// exactly.
struct LocalizedOp {
    DyadicInterval interval;
    int scale; // i, block measure mu_i
    CoeffSequence coeffs;

    LocalizedOp(const DyadicInterval& I, CoeffSequence a)
        : interval(I), scale(I.level - 3), coeffs(std::move(a)) {}

    LocalizedOp(const DyadicInterval& I, int i, CoeffSequence a)
        : interval(I), scale(i), coeffs(std::move(a)) {
        if (I.level != i + 3)
            throw std::invalid_argument("LocalizedOp: interval length must be 2^(i+3)");
    }

    /// [I.begin - 2^i, I.end)
    IntWindow enlarged() const {
        return {interval.begin() - (std::int64_t(1) << scale), interval.end()};
    }
};

inline FiniteSignal apply_localized(const LocalizedOp& op, const FiniteSignal& f) {
    const IntWindow e = op.enlarged();
    const FiniteSignal g = restrict_to(f, e.begin, e.end);
    if (g.is_zero()) return {};
    const FiniteSignal conv = convolve(block_measure(op.coeffs, op.scale), g);
    return restrict_to(conv, op.interval.begin(), op.interval.end());
}

/// A collection of dyadic intervals on one grid offset, bucketed by scale.
class TruncationFamily {
public:
    explicit TruncationFamily(std::int64_t offset = 0) : offset_(offset) {}

    void add(const DyadicInterval& I) {
        if (I.offset != offset_)
            throw std::invalid_argument("TruncationFamily: intervals must share one grid offset");
        by_level_[I.level].push_back(I);
    }

    /// Every dyadic interval contained in `root` (including root itself).
    static TruncationFamily all_dyadic_in(const DyadicInterval& root) {
        TruncationFamily fam(root.offset);
        for (int level = kMinDyadicLevel; level <= root.level; ++level)
            for (const auto& I : scale_partition(level, root.offset, root.begin(), root.end()))
                if (root.contains(I)) fam.add(I);
        return fam;
    }

    std::int64_t offset() const noexcept { return offset_; }
    bool empty() const noexcept { return by_level_.empty(); }

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& kv : by_level_) n += kv.second.size();
        return n;
    }

    const std::map<int, std::vector<DyadicInterval>>& by_level() const noexcept { return by_level_; }

    IntWindow bounding_window() const {
        if (by_level_.empty()) return {0, 0};
        std::int64_t lo = 0, hi = 0;
        bool first = true;
        for (const auto& kv : by_level_)
            for (const auto& I : kv.second) {
                if (first) { lo = I.begin(); hi = I.end(); first = false; }
                lo = std::min(lo, I.begin());
                hi = std::max(hi, I.end());
            }
        return {lo, hi};
    }

private:
    std::int64_t offset_;
    std::map<int, std::vector<DyadicInterval>> by_level_;
};

/// Core of the maximal sum: x -> sup_eps | sum_{I, |I| < eps} T_I input(I) |.
/// Partial sums run over whole scales in increasing order (all intervals of
/// one length enter together); `input` selects the signal each scale acts
/// on, which lets Calderon-Zygmund levels be wired in per scale.
inline FiniteSignal t_star_by_scale(const TruncationFamily& fam, const CoeffSequence& a,
                                    const std::function<const FiniteSignal*(int level)>& input) {
    if (fam.empty()) return {};
    const IntWindow w = fam.bounding_window();
    std::vector<cplx> running(std::size_t(w.length()));
    std::vector<double> best(std::size_t(w.length()), 0.0);
    for (const auto& [level, intervals] : fam.by_level()) {
        const FiniteSignal* f = input(level);
        if (f != nullptr && !f->is_zero()) {
            for (const auto& I : intervals) {
                const FiniteSignal piece = apply_localized(LocalizedOp(I, a), *f);
                for (std::int64_t x = piece.begin(); x < piece.end(); ++x)
                    running[std::size_t(x - w.begin)] += piece.at(x);
            }
        }
        for (std::size_t i = 0; i < running.size(); ++i)
            best[i] = std::max(best[i], std::abs(running[i]));
    }
    std::vector<cplx> out(best.size());
    for (std::size_t i = 0; i < best.size(); ++i) out[i] = best[i];
    return FiniteSignal(w.begin, std::move(out));
}

/// T*_I f: maximal truncation of the localized sum over the family, applied
/// to a single signal.
inline FiniteSignal t_star(const TruncationFamily& fam, const CoeffSequence& a,
                           const FiniteSignal& f) {
    return t_star_by_scale(fam, a, [&f](int) { return &f; });
}

/// Full (untruncated) localized sum over the family.
inline FiniteSignal t_full(const TruncationFamily& fam, const CoeffSequence& a,
                           const FiniteSignal& f) {
    FiniteSignal out;
    for (const auto& [level, intervals] : fam.by_level()) {
        (void)level;
        for (const auto& I : intervals) out += apply_localized(LocalizedOp(I, a), f);
    }
    return out;
}

/// Monte Carlo lower estimate of ||H*_a||_{l^r -> l^r} over random test
/// signals (sign patterns, Gaussian-like, and sparse spikes).
inline ExperimentReport opnorm_estimate(const CoeffSequence& a, double r, int trials,
                                        std::int64_t size, std::uint64_t seed,
                                        std::int64_t window_mult = 16) {
    if (trials < 1) throw std::invalid_argument("opnorm_estimate: trials >= 1 required");
    if (!(r > 1.0)) throw std::domain_error("opnorm_estimate: r > 1 required");
    ExperimentReport rep;
    rep.name = "opnorm[" + a.label() + "]";
    rep.columns = {"trial", "ratio"};
    double best = 0;
    for (int t = 0; t < trials; ++t) {
        rng::Stream gen(rng::derive(seed, std::uint64_t(t)));
        std::vector<cplx> vals(static_cast<std::size_t>(size));
        const int shape = t % 3;
        if (shape == 0) {
            for (auto& v : vals) v = double(gen.sign());
        } else if (shape == 1) {
            for (auto& v : vals) {
                // sum of 4 uniforms, roughly normal
                double s = 0;
                for (int i = 0; i < 4; ++i) s += gen.uniform(-1.0, 1.0);
                v = s;
            }
        } else {
            const std::int64_t spikes = std::max<std::int64_t>(1, size / 64);
            for (std::int64_t i = 0; i < spikes; ++i)
                vals[std::size_t(gen.uniform_int(0, size - 1))] += double(gen.sign());
        }
        const FiniteSignal f(0, std::move(vals));
        if (f.is_zero()) continue;
        const FiniteSignal hf = hilbert_maximal(a, f, natural_window(f, window_mult));
        const double ratio = hf.lp(r) / f.lp(r);
        best = std::max(best, ratio);
        rep.add_row({double(t), ratio});
    }
    rep.set("r", r);
    rep.set("estimate", best);
    rep.set("envelope", std::max(r, 1.0 / (r - 1.0)));
    rep.set("estimate_over_envelope", best / std::max(r, 1.0 / (r - 1.0)));
    return rep;
}

} // namespace oht
