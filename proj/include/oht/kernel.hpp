#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oht/fit.hpp"
#include "oht/phase.hpp"
#include "oht/report.hpp"
#include "oht/signal.hpp"

// Block measures mu_j with entries a(n)/n on (2^{j-1}, 2^j], their
// correlations mu_j * mu~_k, and numerical verification of the diagonal,
// off-diagonal and lacunary decay hypotheses, plus the Fourier-symbol sup.

namespace oht {

/// Bounded coefficient sequence n -> a(n), |a(n)| <= 1.
class CoeffSequence {
public:
    enum class Kind { modulated, constant, custom, random };

    static CoeffSequence modulated(const AdmissiblePhase& p) {
        CoeffSequence a;
        a.kind_ = Kind::modulated;
        a.label_ = "modulated";
        a.eval_ = [p](std::int64_t n) { return unit_exp(p(double(n))); };
        return a;
    }

    static CoeffSequence constant(cplx c = cplx(1.0, 0.0)) {
        if (std::abs(c) > 1.0 + 1e-12)
            throw std::invalid_argument("CoeffSequence: |a(n)| <= 1 required");
        CoeffSequence a;
        a.kind_ = Kind::constant;
        a.label_ = "constant";
        a.eval_ = [c](std::int64_t) { return c; };
        return a;
    }

    /// Table lookup; zero outside the table.
    static CoeffSequence table(std::int64_t start, std::vector<cplx> vals) {
        for (const auto& v : vals)
            if (std::abs(v) > 1.0 + 1e-12)
                throw std::invalid_argument("CoeffSequence: |a(n)| <= 1 required");
        CoeffSequence a;
        a.kind_ = Kind::custom;
        a.label_ = "custom";
        auto data = std::make_shared<FiniteSignal>(start, std::move(vals));
        a.eval_ = [data](std::int64_t n) { return data->at(n); };
        return a;
    }

    /// Frozen random realization; the evaluator must be a pure function of n.
    static CoeffSequence random_from(std::function<double(std::int64_t)> x, std::string label) {
        CoeffSequence a;
        a.kind_ = Kind::random;
        a.label_ = std::move(label);
        a.eval_ = [fn = std::move(x)](std::int64_t n) { return cplx(fn(n), 0.0); };
        return a;
    }

    cplx operator()(std::int64_t n) const { return eval_(n); }
    Kind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

private:
    Kind kind_ = Kind::constant;
    std::string label_;
    std::function<cplx(std::int64_t)> eval_;
};

/// mu_j = sum_{2^{j-1} < n <= 2^j} a(n)/n * delta_n.
inline FiniteSignal block_measure(const CoeffSequence& a, int j) {
    if (j < 1) throw std::invalid_argument("block_measure: j >= 1 required");
    const std::int64_t lo = (std::int64_t(1) << (j - 1)) + 1;
    const std::int64_t hi = std::int64_t(1) << j;
    std::vector<cplx> vals;
    vals.reserve(std::size_t(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) vals.push_back(a(n) / double(n));
    return FiniteSignal(lo, std::move(vals));
}

/// Lacunary variant on ((1+kappa)^{j-1}, (1+kappa)^j]; may be empty when the
/// block brackets no integer.
inline FiniteSignal block_measure_kappa(const CoeffSequence& a, int j, double kappa) {
    if (j < 1) throw std::invalid_argument("block_measure_kappa: j >= 1 required");
    if (kappa <= 0) throw std::domain_error("block_measure_kappa: kappa > 0 required");
    const double q = 1.0 + kappa;
    const std::int64_t lo = std::int64_t(std::floor(std::pow(q, j - 1))) + 1;
    const std::int64_t hi = std::int64_t(std::floor(std::pow(q, j)));
    if (hi < lo) return {};
    std::vector<cplx> vals;
    vals.reserve(std::size_t(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n) vals.push_back(a(n) / double(n));
    return FiniteSignal(lo, std::move(vals));
}

/// mu_j * mu~_k.
inline FiniteSignal correlation(const CoeffSequence& a, int j, int k) {
    if (j < 1 || k < 1) throw std::invalid_argument("correlation: scales must be >= 1");
    return convolve(block_measure(a, j), reflect_conj(block_measure(a, k)));
}

struct DecayOptions {
    double pass_slope_max = 0;  // require fitted slope <= this when enabled
    bool enforce_slope = false;
};

/// Per scale j, D_j = sup_{x != 0} |mu_j * mu~_j(x)|; least-squares slope of
/// log2 D_j against j.  The fitted slope is -(1 + eps_hat); C0 is the
/// smallest constant with D_j <= C0 * 2^{-(1+eps_hat) j} on the sample.
inline ExperimentReport diag_decay_report(const CoeffSequence& a, int j_min, int j_max,
                                          DecayOptions opts = {}) {
    if (j_max - j_min + 1 < 3) throw std::invalid_argument("diag_decay_report: need at least 3 scales");
    ExperimentReport rep;
    rep.name = "diag_decay[" + a.label() + "]";
    rep.columns = {"j", "sup_offdiag_or_diag", "fitted_slope", "residual"};

    std::vector<double> js, logs, sups;
    for (int j = j_min; j <= j_max; ++j) {
        const double d = correlation(a, j, j).sup_off_zero();
        sups.push_back(d);
        js.push_back(double(j));
        if (d > 0) logs.push_back(std::log2(d));
    }
    if (logs.size() < js.size() || logs.size() < 3) {
        // some scale vanished entirely; no meaningful fit
        for (std::size_t i = 0; i < js.size(); ++i)
            rep.add_row({js[i], sups[i], 0.0, 0.0});
        rep.set("degenerate_fit", 1.0);
        return rep;
    }
    const LineFit fit = fit_line(js, logs);
    const double eps_hat = -fit.slope - 1.0;
    double c0 = 0;
    for (std::size_t i = 0; i < js.size(); ++i)
        c0 = std::max(c0, sups[i] * std::pow(2.0, (1.0 + eps_hat) * js[i]));
    for (std::size_t i = 0; i < js.size(); ++i)
        rep.add_row({js[i], sups[i], fit.slope, logs[i] - fit.at(js[i])});
    rep.set("degenerate_fit", 0.0);
    rep.set("fitted_slope", fit.slope);
    rep.set("eps_hat", eps_hat);
    rep.set("C0", c0);
    rep.set("residual_max", fit.residual_max);
    if (opts.enforce_slope) rep.set_flag("slope_ok", fit.slope <= opts.pass_slope_max);
    return rep;
}

/// ||mu_j * mu~_k||_inf for j in a range above k; reports
/// sup_j 2^j ||mu_j * mu~_k||_inf 2^{eps_hat k}.
inline ExperimentReport offdiag_decay_report(const CoeffSequence& a, int k, int j_min, int j_max,
                                             double eps_hat, int scale_gap = 4,
                                             double bound_constant = 0.0) {
    if (j_min < k + scale_gap)
        throw std::invalid_argument("offdiag_decay_report: requires j >= k + gap");
    ExperimentReport rep;
    rep.name = "offdiag_decay[" + a.label() + "]";
    rep.columns = {"j", "k", "sup_offdiag_or_diag", "normalized"};
    double worst = 0;
    for (int j = j_min; j <= j_max; ++j) {
        const double m = correlation(a, j, k).linf();
        const double normalized = m * std::pow(2.0, double(j)) * std::pow(2.0, eps_hat * double(k));
        worst = std::max(worst, normalized);
        rep.add_row({double(j), double(k), m, normalized});
    }
    rep.set("k", double(k));
    rep.set("eps_hat", eps_hat);
    rep.set("sup_normalized", worst);
    if (bound_constant > 0) rep.set_flag("bounded", worst <= bound_constant);
    return rep;
}

/// Lacunary-block analogue of the diagonal report, in base (1+kappa).
/// Verifies |mu_{j,kappa} * mu~_{j,kappa}(x)| <= C [ (1+kappa)^{-j} delta_0
/// + (1+kappa)^{-(1+eps_hat) j} ] and reports the worst C observed.
inline ExperimentReport kappa_decay_report(const AdmissiblePhase& p, double kappa,
                                           int j_min, int j_max, DecayOptions opts = {}) {
    if (kappa <= 0) throw std::domain_error("kappa_decay_report: kappa > 0 required");
    const CoeffSequence a = CoeffSequence::modulated(p);
    const double q = 1.0 + kappa;

    ExperimentReport rep;
    rep.name = "kappa_decay";
    rep.columns = {"j", "sup_offdiag_or_diag", "at_zero", "block_size"};

    std::vector<double> js, logs;
    std::vector<FiniteSignal> corrs(std::size_t(j_max - j_min + 1));
    int empty_blocks = 0;
    for (int j = j_min; j <= j_max; ++j) {
        const FiniteSignal mu = block_measure_kappa(a, j, kappa);
        if (mu.is_zero()) {
            ++empty_blocks;
            rep.add_row({double(j), 0.0, 0.0, 0.0});
            continue;
        }
        const FiniteSignal corr = convolve(mu, reflect_conj(mu));
        corrs[std::size_t(j - j_min)] = corr;
        const double d = corr.sup_off_zero();
        rep.add_row({double(j), d, std::abs(corr.at(0)), double(mu.support_size())});
        if (d > 0) {
            js.push_back(double(j));
            logs.push_back(std::log(d) / std::log(q));
        }
    }
    rep.set("empty_blocks", double(empty_blocks));
    if (js.size() < 3) {
        rep.set("degenerate_fit", 1.0);
        return rep;
    }
    const LineFit fit = fit_line(js, logs);
    const double eps_hat = -fit.slope - 1.0;
    double worst_ratio = 0;
    for (int j = j_min; j <= j_max; ++j) {
        const FiniteSignal& corr = corrs[std::size_t(j - j_min)];
        if (corr.is_zero()) continue;
        const double off_bound = std::pow(q, -(1.0 + eps_hat) * double(j));
        for (std::int64_t x = corr.begin(); x < corr.end(); ++x) {
            const double bound = off_bound + (x == 0 ? std::pow(q, -double(j)) : 0.0);
            worst_ratio = std::max(worst_ratio, std::abs(corr.at(x)) / bound);
        }
    }
    rep.set("degenerate_fit", 0.0);
    rep.set("fitted_slope", fit.slope);
    rep.set("eps_hat", eps_hat);
    rep.set("worst_ratio", worst_ratio);
    if (opts.enforce_slope) rep.set_flag("slope_ok", fit.slope <= opts.pass_slope_max);
    return rep;
}

struct SymbolSup {
    double value = 0;       // max over the frequency grid of |sum mu(n) e(n theta)|
    double grid_error = 0;  // modulus-of-continuity bound: true sup <= value + grid_error
    std::int64_t grid = 0;  // grid actually used (power of two)
    bool grid_too_coarse = false;
};

/// Maximum of the Fourier symbol over a uniform frequency grid.  The grid is
/// rounded up to a power of two; `grid_too_coarse` warns when it is below
/// 32x the support length (the Nyquist margin used throughout).
inline SymbolSup symbol_sup(const FiniteSignal& mu, std::int64_t grid_points) {
    SymbolSup out;
    if (mu.is_zero()) { out.grid = std::max<std::int64_t>(grid_points, 1); return out; }
    if (grid_points < 2) throw std::invalid_argument("symbol_sup: grid_points >= 2 required");
    const std::size_t n = detail::next_pow2(std::size_t(std::max<std::int64_t>(grid_points, std::int64_t(mu.support_size()))));
    out.grid = std::int64_t(n);
    out.grid_too_coarse = out.grid < 32 * std::int64_t(mu.support_size());

    // |m(t/G)| = |sum_i v_i e(i t / G)| (the support-offset phase drops out).
    std::vector<cplx> buf(n);
    std::copy(mu.values().begin(), mu.values().end(), buf.begin());
    detail::fft_pow2(buf, +1);
    for (const auto& v : buf) out.value = std::max(out.value, std::abs(v));

    double weighted = 0; // sum |n mu(n)| bounds the symbol derivative / 2 pi
    for (std::int64_t x = mu.begin(); x < mu.end(); ++x)
        weighted += std::abs(double(x)) * std::abs(mu.at(x));
    out.grid_error = two_pi * weighted / (2.0 * double(n));
    return out;
}

} // namespace oht
