#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "oht/fit.hpp"
#include "oht/kernel.hpp"
#include "oht/operators.hpp"
#include "oht/phase.hpp"
#include "oht/report.hpp"
#include "oht/signal.hpp"

// Simulated measure-preserving systems, the modulated ergodic sums
// sum e(p(n))/n f(tau^n x), lacunary tail-decay diagnostics, and the
// transference identity against the discrete operator.

namespace oht {

inline double frac_part(double x) { return x - std::floor(x); }

/// Irrational rotation on the circle [0, 1).
struct RotationSystem {
    double alpha;
    double orbit(double x, std::int64_t n) const { return frac_part(x + double(n) * alpha); }
};

/// Translation on Z; tau^n f(x) = f(x - n), matching the orientation of the
/// discrete kernel sum_{n} a(n)/n f(x-n).
struct ShiftSystem {
    std::int64_t orbit(std::int64_t x, std::int64_t n) const { return x - n; }
};

/// Permutation of {0..M-1} with uniform measure.  The constructor checks
/// bijectivity (measure preservation).
struct PermutationSystem {
    std::vector<int> map;

    explicit PermutationSystem(std::vector<int> m) : map(std::move(m)) {
        std::vector<bool> seen(map.size(), false);
        for (const int v : map) {
            if (v < 0 || std::size_t(v) >= map.size() || seen[std::size_t(v)])
                throw std::invalid_argument("PermutationSystem: not a bijection");
            seen[std::size_t(v)] = true;
        }
    }

    int orbit(int x, std::int64_t n) const {
        // cycle-walk; M is small in every experiment here
        int y = x;
        const std::int64_t m = std::int64_t(map.size());
        std::int64_t steps = ((n % m) + m) % m; // tau^m has a period dividing lcm of cycles <= m!
        // walk the exact number of steps mod the cycle length of x
        std::int64_t cycle_len = 1;
        for (int z = map[std::size_t(x)]; z != x; z = map[std::size_t(z)]) ++cycle_len;
        steps = ((n % cycle_len) + cycle_len) % cycle_len;
        for (std::int64_t i = 0; i < steps; ++i) y = map[std::size_t(y)];
        return y;
    }
};

/// Step function on [0,1) given by breakpoints: value[i] on
/// [breaks[i], breaks[i+1]), wrapping at 1.
struct StepFunction {
    std::vector<double> breaks; // strictly increasing, in [0, 1)
    std::vector<cplx> values;   // same length

    cplx operator()(double x) const {
        if (breaks.empty()) return {};
        const double y = frac_part(x);
        std::size_t lo = 0;
        for (std::size_t i = 0; i < breaks.size(); ++i)
            if (y >= breaks[i]) lo = i;
        return values[lo];
    }
};

namespace detail {

/// Neumaier compensated accumulation of complex terms.
struct CompensatedSum {
    double re = 0, re_c = 0, im = 0, im_c = 0;

    void add(cplx v) {
        add_part(re, re_c, v.real());
        add_part(im, im_c, v.imag());
    }

    cplx value() const { return {re + re_c, im + im_c}; }

private:
    static void add_part(double& s, double& c, double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v)) c += (s - t) + v;
        else c += (v - t) + s;
        s = t;
    }
};

} // namespace detail

/// sum_{n=1}^{N} e(p(n))/n f(tau^n x), compensated summation throughout.
template <class System, class F, class Point>
cplx modulated_sum(const System& sys, const AdmissiblePhase& p, F&& f, Point x, std::int64_t N) {
    detail::CompensatedSum acc;
    for (std::int64_t n = 1; n <= N; ++n)
        acc.add(unit_exp(p(double(n))) / double(n) * f(sys.orbit(x, n)));
    return acc.value();
}

/// Lacunary tail diagnostics: block sums over ((1+kappa)^j, (1+kappa)^{j+1}]
/// at sampled points, the running sup of tail remainders, and the fitted
/// decay exponent of max_x |block sum| in base (1+kappa).
struct TailProfile {
    double kappa = 0;
    int j_max = 0;
    std::size_t points = 0;
    std::vector<std::vector<cplx>> block_sums;      // [point][j]
    std::vector<std::vector<double>> running_tail;  // [point][j] = sup_{j' >= j} |sum_{l >= j'} sigma_l|
    std::vector<double> max_block_abs;              // [j] over points
    bool fit_valid = false;
    double fitted_rate = 0;      // slope in base (1+kappa); negative = decay
    double fit_intercept = 0;
    double model_at_jmax = 0;    // (1+kappa)^{intercept + rate * j_max}
    double max_running_tail_at_jmax = 0;

    double model_at(int j) const {
        return std::pow(1.0 + kappa, fit_intercept + fitted_rate * double(j));
    }
};

template <class System, class F, class Point>
TailProfile tail_profile(const System& sys, const AdmissiblePhase& p, F&& f,
                         const std::vector<Point>& xs, double kappa, int j_max) {
    if (kappa <= 0) throw std::domain_error("tail_profile: kappa > 0 required");
    if (j_max < 1) throw std::invalid_argument("tail_profile: j_max >= 1 required");

    TailProfile out;
    out.kappa = kappa;
    out.j_max = j_max;
    out.points = xs.size();

    const double q = 1.0 + kappa;
    std::vector<std::int64_t> boundary(std::size_t(j_max) + 2);
    for (int j = 0; j <= j_max + 1; ++j)
        boundary[std::size_t(j)] = std::int64_t(std::floor(std::pow(q, j)));

    out.block_sums.resize(xs.size());
    for (std::size_t xi = 0; xi < xs.size(); ++xi)
        out.block_sums[xi].assign(std::size_t(j_max) + 1, cplx{});

    // phase coefficients e(p(n))/n are shared across sample points
    std::vector<cplx> coeff;
    for (int j = 0; j <= j_max; ++j) {
        const std::int64_t n_lo = boundary[std::size_t(j)] + 1;
        const std::int64_t n_hi = boundary[std::size_t(j) + 1];
        if (n_hi < n_lo) continue;
        coeff.resize(std::size_t(n_hi - n_lo + 1));
        for (std::int64_t n = n_lo; n <= n_hi; ++n)
            coeff[std::size_t(n - n_lo)] = unit_exp(p(double(n))) / double(n);
        for (std::size_t xi = 0; xi < xs.size(); ++xi) {
            detail::CompensatedSum acc;
            for (std::int64_t n = n_lo; n <= n_hi; ++n)
                acc.add(coeff[std::size_t(n - n_lo)] * f(sys.orbit(xs[xi], n)));
            out.block_sums[xi][std::size_t(j)] = acc.value();
        }
    }

    // tails T_j = sum_{l >= j} sigma_l and their running sup
    out.running_tail.resize(xs.size());
    for (std::size_t xi = 0; xi < xs.size(); ++xi) {
        auto& tails = out.running_tail[xi];
        tails.assign(std::size_t(j_max) + 1, 0.0);
        cplx t{};
        double sup = 0;
        for (int j = j_max; j >= 0; --j) {
            t += out.block_sums[xi][std::size_t(j)];
            sup = std::max(sup, std::abs(t));
            tails[std::size_t(j)] = sup;
        }
    }

    out.max_block_abs.assign(std::size_t(j_max) + 1, 0.0);
    for (int j = 0; j <= j_max; ++j)
        for (std::size_t xi = 0; xi < xs.size(); ++xi)
            out.max_block_abs[std::size_t(j)] =
                std::max(out.max_block_abs[std::size_t(j)], std::abs(out.block_sums[xi][std::size_t(j)]));

    std::vector<double> js, ys;
    for (int j = 1; j <= j_max; ++j) {
        const double m = out.max_block_abs[std::size_t(j)];
        if (m > 0) {
            js.push_back(double(j));
            ys.push_back(std::log(m) / std::log(q));
        }
    }
    if (js.size() >= 3) {
        const LineFit fit = fit_line(js, ys);
        out.fit_valid = true;
        out.fitted_rate = fit.slope;
        out.fit_intercept = fit.intercept;
        out.model_at_jmax = out.model_at(j_max);
        for (std::size_t xi = 0; xi < xs.size(); ++xi)
            out.max_running_tail_at_jmax =
                std::max(out.max_running_tail_at_jmax, out.running_tail[xi][std::size_t(j_max)]);
    }
    return out;
}

inline ExperimentReport tail_profile_report(const TailProfile& tp, double residual_factor = 10.0) {
    ExperimentReport rep;
    rep.name = "ergodic_tails";
    rep.columns = {"x_index", "j", "block_sum_abs", "running_tail_sup"};
    for (std::size_t xi = 0; xi < tp.block_sums.size(); ++xi)
        for (int j = 0; j <= tp.j_max; ++j)
            rep.add_row({double(xi), double(j), std::abs(tp.block_sums[xi][std::size_t(j)]),
                         tp.running_tail[xi][std::size_t(j)]});
    rep.set("kappa", tp.kappa);
    rep.set("j_max", double(tp.j_max));
    if (tp.fit_valid) {
        rep.set("fitted_rate", tp.fitted_rate);
        rep.set("model_at_jmax", tp.model_at_jmax);
        rep.set("max_running_tail_at_jmax", tp.max_running_tail_at_jmax);
        rep.set_flag("decay_negative", tp.fitted_rate < 0);
        rep.set_flag("tail_below_model",
                     tp.max_running_tail_at_jmax <= residual_factor * tp.model_at_jmax);
    } else {
        rep.set("trivial_fit", 1.0);
    }
    return rep;
}

/// On the shift system, the ergodic prefix sum equals the difference of two
/// truncated tails of the discrete operator:
///   sum_{n=1}^{N} e(p(n))/n f(x-n) = T_1 f(x) - T_{N+1} f(x).
/// Verified pointwise over a window, together with the maximal variants.
inline ExperimentReport transference_check(const AdmissiblePhase& p, const FiniteSignal& f,
                                           std::int64_t N, IntWindow w, double tol = 1e-12) {
    if (N < 1) throw std::invalid_argument("transference_check: N >= 1 required");
    const CoeffSequence a = CoeffSequence::modulated(p);
    const ShiftSystem sys;
    auto feval = [&f](std::int64_t y) { return f.at(y); };

    const FiniteSignal full = truncated_sum(a, f, 1, w);
    const FiniteSignal tail = truncated_sum(a, f, N + 1, w);

    double worst_eq = 0, worst_max = 0;
    for (std::int64_t x = w.begin; x < w.end; ++x) {
        const cplx ergodic = modulated_sum(sys, p, feval, x, N);
        const cplx discrete = full.at(x) - tail.at(x);
        worst_eq = std::max(worst_eq, std::abs(ergodic - discrete));

        // maximal variants over truncation points n <= N
        double erg_max = 0;
        detail::CompensatedSum acc;
        const std::int64_t n_hi = std::min(N, x - f.begin());
        for (std::int64_t n = 1; n <= n_hi; ++n) {
            acc.add(unit_exp(p(double(n))) / double(n) * f.at(x - n));
            erg_max = std::max(erg_max, std::abs(acc.value()));
        }
        double disc_max = 0;
        cplx suffix{};
        // prefix(n) = total - tail(n+1); accumulate the tails backwards
        std::vector<cplx> tail_from(std::size_t(std::max<std::int64_t>(n_hi, 0)) + 1);
        for (std::int64_t n = n_hi; n >= 1; --n) {
            tail_from[std::size_t(n)] = suffix; // sum over m > n
            suffix += a(n) / double(n) * f.at(x - n);
        }
        const cplx total = suffix;
        for (std::int64_t n = 1; n <= n_hi; ++n)
            disc_max = std::max(disc_max, std::abs(total - tail_from[std::size_t(n)]));
        worst_max = std::max(worst_max, std::abs(erg_max - disc_max));
    }

    ExperimentReport rep;
    rep.name = "transference";
    rep.columns = {"x", "abs_difference"};
    rep.set("N", double(N));
    rep.set("max_abs_difference", worst_eq);
    rep.set("max_abs_difference_maximal", worst_max);
    rep.set_flag("pointwise_match", worst_eq <= tol);
    rep.set_flag("maximal_match", worst_max <= tol);
    return rep;
}

/// Kolmogorov-Smirnov distance of the orbit {x + n alpha} from uniform.
inline double orbit_ks_statistic(const RotationSystem& sys, double x, std::int64_t n_samples) {
    std::vector<double> pts(static_cast<std::size_t>(n_samples));
    for (std::int64_t n = 1; n <= n_samples; ++n)
        pts[std::size_t(n - 1)] = sys.orbit(x, n);
    std::sort(pts.begin(), pts.end());
    double ks = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double lo = double(i) / double(n_samples);
        const double hi = double(i + 1) / double(n_samples);
        ks = std::max({ks, std::abs(pts[i] - lo), std::abs(pts[i] - hi)});
    }
    return ks;
}

} // namespace oht
