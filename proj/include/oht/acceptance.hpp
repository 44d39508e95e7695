#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "oht/ergodic.hpp"
#include "oht/generators.hpp"
#include "oht/kernel.hpp"
#include "oht/operators.hpp"
#include "oht/random_ht.hpp"
#include "oht/reference.hpp"
#include "oht/rng.hpp"
#include "oht/sparse.hpp"

// The verification suite: twelve numbered criteria, each a self-contained
// experiment with pinned thresholds and deterministic seeds.  Calibration
// fixtures below were measured once on the shipped configuration and are
// frozen; reruns are deterministic, so a drift beyond the stated slack
// indicates a behavioral change.

namespace oht::acceptance {

// --- frozen calibration fixtures -------------------------------------------
// criterion 2: max over k in 4..8, j in k+4..16 of 2^j ||mu_j*mu~_k||_inf 2^{0.05k}
// measured 0.96542 on the shipped phase; frozen with ~3% headroom.
inline constexpr double kOffdiagFrozenConstant = 1.0;
// criterion 5: max over 200 instances and r of ratio * (r-1), measured at
// first calibration; reruns must stay within +10%.
inline constexpr double kDominationFrozenConstant = 1.0386;
// criterion 8: fitted Chernoff exponent must land in this window.
inline constexpr double kChernoffLow = 0.3, kChernoffHigh = 0.6;
// criterion 10: marking threshold (in units of 2^{-i/4-j}) and the crossover
// factor of the scale precondition j >= factor * 2^{i/2}.
inline constexpr double kExceptionalThreshold = 1.5;
inline constexpr double kExceptionalCrossover = 4.0;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    std::string detail;
    ExperimentReport report;
};

namespace detail {

inline const AdmissiblePhase& shipped_phase() {
    static const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
    return p;
}

inline std::string fmt(double v) { return format_double(v); }

class Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

} // namespace detail

// --- criterion 1: diagonal decay -------------------------------------------
inline CriterionResult criterion_diag_decay() {
    detail::Timer timer;
    CriterionResult res{1, "diagonal-decay", false, 0, "", {}};
    res.report.name = "criterion1_diag_decay";
    res.report.columns = {"j", "sup_modulated", "sup_constant", "oracle_rel_err"};

    const CoeffSequence mod = CoeffSequence::modulated(detail::shipped_phase());
    const CoeffSequence one = CoeffSequence::constant();

    std::vector<double> js, log_mod, log_one;
    double worst_oracle_rel = 0;
    for (int j = 8; j <= 16; ++j) {
        const double d_mod = correlation(mod, j, j).sup_off_zero();
        const double d_one = correlation(one, j, j).sup_off_zero();
        // direct double-sum oracle, full comparison at every scale
        const double o_mod = reference::diag_sup_direct(mod, j);
        const double o_one = reference::diag_sup_direct(one, j);
        const double rel = std::max(std::abs(d_mod - o_mod) / o_mod, std::abs(d_one - o_one) / o_one);
        worst_oracle_rel = std::max(worst_oracle_rel, rel);
        js.push_back(double(j));
        log_mod.push_back(std::log2(d_mod));
        log_one.push_back(std::log2(d_one));
        res.report.add_row({double(j), d_mod, d_one, rel});
    }
    const double slope_mod = fit_line(js, log_mod).slope;
    const double slope_one = fit_line(js, log_one).slope;

    res.seconds = timer.seconds();
    const bool mod_ok = slope_mod <= -1.05;
    const bool one_ok = slope_one >= -1.02;
    const bool oracle_ok = worst_oracle_rel <= 1e-10;
    const bool time_ok = res.seconds <= 60.0;
    res.passed = mod_ok && one_ok && oracle_ok && time_ok;
    res.report.set("slope_modulated", slope_mod);
    res.report.set("slope_constant", slope_one);
    res.report.set("worst_oracle_rel_err", worst_oracle_rel);
    res.report.set_flag("modulated_slope_le_-1.05", mod_ok);
    res.report.set_flag("constant_slope_ge_-1.02", one_ok);
    res.report.set_flag("oracle_match", oracle_ok);
    res.report.set_flag("runtime_le_60s", time_ok);
    res.detail = "slope(t^1.5)=" + detail::fmt(slope_mod) + " slope(1)=" + detail::fmt(slope_one);
    return res;
}

// --- criterion 2: off-diagonal decay ----------------------------------------
inline CriterionResult criterion_offdiag_decay() {
    detail::Timer timer;
    CriterionResult res{2, "offdiagonal-decay", false, 0, "", {}};
    res.report.name = "criterion2_offdiag_decay";
    res.report.columns = {"k", "j", "normalized"};

    const CoeffSequence mod = CoeffSequence::modulated(detail::shipped_phase());
    double worst = 0;
    for (int k = 4; k <= 8; ++k)
        for (int j = k + 4; j <= 16; ++j) {
            const double m = correlation(mod, j, k).linf();
            const double normalized = m * std::pow(2.0, double(j)) * std::pow(2.0, 0.05 * double(k));
            worst = std::max(worst, normalized);
            res.report.add_row({double(k), double(j), normalized});
        }
    res.seconds = timer.seconds();
    const bool bounded = worst <= kOffdiagFrozenConstant;
    const bool time_ok = res.seconds <= 60.0;
    res.passed = bounded && time_ok;
    res.report.set("sup_normalized", worst);
    res.report.set("frozen_constant", kOffdiagFrozenConstant);
    res.report.set_flag("bounded_by_frozen_constant", bounded);
    res.report.set_flag("runtime_le_60s", time_ok);
    res.detail = "sup 2^j||mu_j*mu~_k||inf 2^{0.05k} = " + detail::fmt(worst) +
                 " <= " + detail::fmt(kOffdiagFrozenConstant);
    return res;
}

// --- criterion 3: oracle equivalence ----------------------------------------
inline CriterionResult criterion_oracle_equivalence() {
    detail::Timer timer;
    CriterionResult res{3, "oracle-equivalence", false, 0, "", {}};
    res.report.name = "criterion3_oracle_equivalence";
    res.report.columns = {"trial", "kind", "support", "max_abs_err"};

    const AdmissiblePhase& phase = detail::shipped_phase();
    auto coeff_for = [&phase](int kind, std::int64_t n_max, std::uint64_t seed) {
        if (kind == 0) {
            std::vector<cplx> tab(static_cast<std::size_t>(n_max));
            for (std::int64_t n = 1; n <= n_max; ++n)
                tab[std::size_t(n - 1)] = unit_exp(phase(double(n)));
            return CoeffSequence::table(1, std::move(tab));
        }
        if (kind == 1) return CoeffSequence::constant(cplx(0.8, -0.6) * 0.9);
        return RandomRealization(Dist::rademacher, seed, n_max).as_coeff();
    };

    double worst = 0;
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t seed = rng::derive(0xACCE97, std::uint64_t(t));
        rng::Stream gs(seed);
        const int component = t % 3;
        double err = 0;
        std::int64_t support = 0;
        if (component == 0) {
            // maximal truncation vs exhaustive sweep over every N
            const int level = int(gs.uniform_int(4, 12));
            const FiniteSignal f = gen::complex_signal(gs.uniform_int(-50, 50),
                                                       std::int64_t(1) << level, rng::derive(seed, 1));
            support = std::int64_t(f.support_size());
            const IntWindow w{f.begin() - 8, f.end() + 2 * support};
            const CoeffSequence a = coeff_for(t % 2 == 0 ? 0 : 2, w.end - f.begin(), rng::derive(seed, 2));
            err = max_abs_diff(hilbert_maximal(a, f, w),
                               reference::hilbert_maximal_bruteforce(a, f, w));
        } else if (component == 1) {
            // maximal localized sums vs explicit threshold sweep
            const int level = int(gs.uniform_int(5, 12));
            const DyadicInterval I0(level, gs.uniform_int(-3, 3), gs.uniform_int(-40, 40));
            FiniteSignal f = gen::complex_signal(I0.begin(), I0.length(), rng::derive(seed, 3));
            f = restrict_to(f, I0.begin(), I0.end());
            support = std::int64_t(f.support_size());
            const CoeffSequence a = coeff_for(t % 3 == 1 ? 1 : 0, I0.length() + 16, rng::derive(seed, 4));
            const TruncationFamily full = TruncationFamily::all_dyadic_in(I0);
            TruncationFamily fam(I0.offset);
            for (const auto& [lvl, ivs] : full.by_level()) {
                (void)lvl;
                for (const auto& I : ivs)
                    if (gs.chance(0.7)) fam.add(I);
            }
            if (!fam.empty())
                err = max_abs_diff(t_star(fam, a, f), reference::t_star_direct(fam, a, f));
        } else {
            // a single localized piece vs its direct definition
            const int level = int(gs.uniform_int(4, 11));
            const DyadicInterval I(level, gs.uniform_int(-4, 4), gs.uniform_int(-30, 30));
            const FiniteSignal f = gen::complex_signal(I.begin() - I.length(), 2 * I.length(),
                                                       rng::derive(seed, 5));
            support = std::int64_t(f.support_size());
            const CoeffSequence a = coeff_for(t % 3 == 2 ? 2 : 0, 2 * I.length() + 16, rng::derive(seed, 6));
            err = max_abs_diff(apply_localized(LocalizedOp(I, a), f),
                               reference::apply_localized_direct(I, a, f));
        }
        worst = std::max(worst, err);
        res.report.add_row({double(t), double(component), double(support), err});
    }
    res.seconds = timer.seconds();
    res.passed = worst <= 1e-10;
    res.report.set("max_abs_err", worst);
    res.report.set_flag("max_err_le_1e-10", res.passed);
    res.detail = "max abs error over 100 instances = " + detail::fmt(worst);
    return res;
}

// --- criteria 4 and 5: sparse certification and domination shape ------------
inline void criterion_sparse_pair(CriterionResult& cert_res, CriterionResult& shape_res) {
    detail::Timer timer;
    cert_res = {4, "sparse-certification", false, 0, "", {}};
    shape_res = {5, "sparse-domination-shape", false, 0, "", {}};
    cert_res.report.name = "criterion4_sparse_certification";
    cert_res.report.columns = {"trial", "members", "worst_child_measure", "certified"};
    shape_res.report.name = "criterion5_domination_shape";
    shape_res.report.columns = {"trial", "r", "ratio", "ratio_times_rm1"};

    const CoeffSequence mod = CoeffSequence::modulated(detail::shipped_phase());
    const DyadicInterval I0(12, 0);
    const std::vector<double> rs{1.1, 1.2, 1.5, 1.95};

    bool all_certified = true, all_measure = true;
    int nontrivial = 0;
    double worst_shape = 0;
    for (int t = 0; t < 200; ++t) {
        const FiniteSignal f = (t % 2 == 0) ? gen::bumpy_profile(I0, rng::derive(0xF00, t))
                                            : gen::scattered_profile(I0, rng::derive(0xF01, t));
        const FiniteSignal g = (t % 2 == 0) ? gen::scattered_profile(I0, rng::derive(0xF02, t))
                                            : gen::bumpy_profile(I0, rng::derive(0xF03, t));
        const SparseBuildResult built = build_sparse_collection(mod, f, g, I0, rs[0]);
        if (!built.measure_ok) all_measure = false;
        if (built.collection.size() > 1) ++nontrivial;

        // the produced intervals must certify greedily, exactly
        std::vector<DyadicInterval> intervals;
        for (const auto& m : built.collection.members) intervals.push_back(m.interval);
        const CertifyResult cert = certify_sparse(intervals);
        if (!cert.ok) all_certified = false;

        // and the designated sets of the built collection are themselves valid
        for (std::size_t i = 0; i < built.collection.members.size() && all_certified; ++i) {
            const auto& mi = built.collection.members[i];
            if (4 * mi.designated.count() < mi.interval.length()) all_certified = false;
            for (std::size_t k = i + 1; k < built.collection.members.size(); ++k)
                if (mi.designated.intersects(built.collection.members[k].designated)) {
                    all_certified = false;
                    break;
                }
        }
        cert_res.report.add_row({double(t), double(built.collection.size()),
                                 built.worst_child_measure, cert.ok ? 1.0 : 0.0});

        for (const double r : rs) {
            const double form = sparse_form(built.collection, f, g, 1.0, r).value;
            const double ratio = form > 0 ? built.pairing / form : 0.0;
            worst_shape = std::max(worst_shape, ratio * (r - 1.0));
            shape_res.report.add_row({double(t), r, ratio, ratio * (r - 1.0)});
        }
    }
    const double elapsed = timer.seconds();

    cert_res.seconds = elapsed;
    cert_res.passed = all_certified && all_measure && nontrivial >= 50;
    cert_res.report.set("instances", 200.0);
    cert_res.report.set("nontrivial_collections", double(nontrivial));
    cert_res.report.set_flag("all_certified", all_certified);
    cert_res.report.set_flag("all_nodes_measure_bounded", all_measure);
    cert_res.report.set_flag("collections_nontrivial", nontrivial >= 50);
    cert_res.detail = "200/200 instances certified=" + std::string(all_certified ? "yes" : "no") +
                      ", nontrivial=" + std::to_string(nontrivial);

    shape_res.seconds = elapsed;
    const bool shape_ok = worst_shape <= 1.10 * kDominationFrozenConstant;
    shape_res.passed = shape_ok;
    shape_res.report.set("worst_ratio_times_rm1", worst_shape);
    shape_res.report.set("frozen_constant", kDominationFrozenConstant);
    shape_res.report.set_flag("within_10pct_of_frozen", shape_ok);
    shape_res.detail = "max ratio*(r-1) = " + detail::fmt(worst_shape) + " vs frozen " +
                       detail::fmt(kDominationFrozenConstant) + " (+10% allowed)";
}

// --- criterion 6: Calderon-Zygmund invariants --------------------------------
inline CriterionResult criterion_cz_invariants() {
    detail::Timer timer;
    CriterionResult res{6, "cz-invariants", false, 0, "", {}};
    res.report.name = "criterion6_cz_invariants";
    res.report.columns = {"trial", "stopping_count", "recon_err", "bs_margin", "b1_margin"};

    const DyadicInterval I0(12, 0);
    bool recon_ok = true, bs_ok = true, b1_ok = true;
    int nontrivial = 0;
    double worst_bs = 0, worst_b1 = 0;
    for (int t = 0; t < 100; ++t) {
        const FiniteSignal f = (t % 2 == 0) ? gen::bumpy_profile(I0, rng::derive(0xC2, t))
                                            : gen::scattered_profile(I0, rng::derive(0xC3, t));
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        if (!d.stopping.empty()) ++nontrivial;

        const double recon_err = max_abs_diff(d.good + d.bad(), f);
        if (recon_err != 0.0) recon_ok = false;

        double bs_margin = 0, sum_b1 = 0;
        for (const auto& [s, bs] : d.levels) {
            bs_margin = std::max(bs_margin, bs.linf() / (std::pow(2.0, double(s + 1)) * d.root_average));
            sum_b1 += bs.l1();
        }
        const double b1_margin = d.root_average > 0
            ? sum_b1 / (double(I0.length()) * d.root_average) : 0.0;
        if (bs_margin > 1.0) bs_ok = false;
        if (b1_margin > 1.0) b1_ok = false;
        worst_bs = std::max(worst_bs, bs_margin);
        worst_b1 = std::max(worst_b1, b1_margin);
        res.report.add_row({double(t), double(d.stopping.size()), recon_err, bs_margin, b1_margin});
    }
    res.seconds = timer.seconds();
    res.passed = recon_ok && bs_ok && b1_ok && nontrivial >= 25;
    res.report.set("worst_bs_margin", worst_bs);
    res.report.set("worst_b1_margin", worst_b1);
    res.report.set("nontrivial_decompositions", double(nontrivial));
    res.report.set_flag("reconstruction_exact", recon_ok);
    res.report.set_flag("bs_sup_bounded", bs_ok);
    res.report.set_flag("b_l1_bounded", b1_ok);
    res.report.set_flag("decompositions_nontrivial", nontrivial >= 25);
    res.detail = "worst ||b_s||inf / 2^{s+1}<f> = " + detail::fmt(worst_bs) +
                 ", worst sum||b_s||_1 / |I0|<f> = " + detail::fmt(worst_b1);
    return res;
}

// --- criterion 7: Rademacher-Menshov chaining --------------------------------
inline CriterionResult criterion_rademacher_menshov() {
    detail::Timer timer;
    CriterionResult res{7, "rademacher-menshov", false, 0, "", {}};
    res.report.name = "criterion7_rademacher_menshov";
    res.report.columns = {"trial", "N", "domination_violation", "l2_over_certificate"};

    bool dominated = true, l2_ok = true;
    for (int t = 0; t < 100; ++t) {
        rng::Stream gs(rng::derive(0x27, t));
        const int N = int(gs.uniform_int(1, 64));
        std::vector<FiniteSignal> phis;
        for (int j = 0; j < N; ++j) {
            std::vector<cplx> v(static_cast<std::size_t>(gs.uniform_int(4, 64)));
            for (auto& z : v) z = cplx(gs.uniform(-1, 1), gs.uniform(-1, 1));
            phis.emplace_back(gs.uniform_int(-32, 32), std::move(v));
        }
        const RMResult rm = rm_maximal(phis, 256, rng::derive(0x28, t));
        const FiniteSignal truth = reference::running_max_prefix(phis);
        double violation = 0;
        for (std::int64_t x = truth.begin(); x < truth.end(); ++x)
            violation = std::max(violation, truth.at(x).real() - rm.bound.at(x).real());
        if (violation > 1e-12) dominated = false;
        if (!rm.l2_ok) l2_ok = false;
        res.report.add_row({double(t), double(N), violation,
                            rm.certificate > 0 ? rm.bound_l2 / rm.certificate : 0.0});
    }
    res.seconds = timer.seconds();
    res.passed = dominated && l2_ok;
    res.report.set_flag("pointwise_domination", dominated);
    res.report.set_flag("l2_below_certificate", l2_ok);
    res.detail = std::string("chaining dominates: ") + (dominated ? "yes" : "no") +
                 ", l2 certificate holds: " + (l2_ok ? "yes" : "no");
    return res;
}

// --- criterion 8: Chernoff tails ---------------------------------------------
inline CriterionResult criterion_chernoff() {
    detail::Timer timer;
    CriterionResult res{8, "chernoff-tails", false, 0, "", {}};

    const std::int64_t N = 10000;
    const double sqrtN = std::sqrt(double(N));
    std::vector<double> grid;
    for (int k = 1; k <= 5; ++k) grid.push_back(double(k) * sqrtN);
    ExperimentReport rep = chernoff_check(Dist::rademacher, N, grid, 10000, 0xC4E2);

    // fitted exponent with rule-of-three handling of unobserved tails,
    // then the domination check P_k <= exp(-c k^2 / 2)
    const double c = rep.get("c_fit_rule3");
    bool dominated = true;
    for (std::size_t row = 0; row < rep.rows.size(); ++row) {
        const double k = rep.rows[row][0] / sqrtN;
        const double tail = rep.rows[row][2];
        if (tail > std::exp(-c * k * k / 2.0)) dominated = false;
    }
    res.seconds = timer.seconds();
    const bool in_window = c >= kChernoffLow && c <= kChernoffHigh;
    const bool time_ok = res.seconds <= 60.0;
    res.passed = in_window && dominated && rep.flag("tails_monotone") && time_ok;
    rep.set_flag("c_in_[0.3,0.6]", in_window);
    rep.set_flag("tails_dominated", dominated);
    rep.set_flag("runtime_le_60s", time_ok);
    rep.name = "criterion8_chernoff";
    res.report = rep;
    res.detail = "fitted c = " + detail::fmt(c) + " in [0.3, 0.6]";
    return res;
}

// --- criterion 9: random correlations ----------------------------------------
inline CriterionResult criterion_random_correlations() {
    detail::Timer timer;
    CriterionResult res{9, "random-correlations", false, 0, "", {}};
    res.report.name = "criterion9_random_correlations";
    res.report.columns = {"i", "j", "fraction_within_bound"};

    // constants calibrated on smaller scales
    const double C_diag = calibrate_correlation_constant(Dist::rademacher, {{6, 6}, {7, 7}}, 100, 0x909);
    const double C_off = calibrate_correlation_constant(Dist::rademacher, {{4, 10}, {5, 11}}, 100, 0x808);

    bool all_quantiles = true, trivial_ok = true;
    for (int i = 8; i <= 12; ++i) {
        const ExperimentReport rep =
            random_correlation_report(Dist::rademacher, i, i, 100, rng::derive(0x606, i), C_diag);
        res.report.add_row({double(i), double(i), rep.get("fraction_within_bound")});
        if (!rep.flag("quantile_ok")) all_quantiles = false;
        if (!rep.flag("trivial_bound_ok")) trivial_ok = false;
    }
    const ExperimentReport off =
        random_correlation_report(Dist::rademacher, 6, 12, 100, 0x505, C_off);
    res.report.add_row({6.0, 12.0, off.get("fraction_within_bound")});
    if (!off.flag("quantile_ok")) all_quantiles = false;
    if (!off.flag("trivial_bound_ok")) trivial_ok = false;

    res.seconds = timer.seconds();
    res.passed = all_quantiles && trivial_ok;
    res.report.set("C_diag", C_diag);
    res.report.set("C_offdiag", C_off);
    res.report.set_flag("quantiles_ge_95pct", all_quantiles);
    res.report.set_flag("trivial_bound_exact", trivial_ok);
    res.detail = "C_diag=" + detail::fmt(C_diag) + " C_off=" + detail::fmt(C_off) +
                 " all fractions >= 95%: " + (all_quantiles ? "yes" : "no");
    return res;
}

// --- criterion 10: exceptional counting --------------------------------------
inline CriterionResult criterion_exceptional_counting() {
    detail::Timer timer;
    CriterionResult res{10, "exceptional-counting", false, 0, "", {}};
    res.report.name = "criterion10_exceptional_counting";
    res.report.columns = {"i", "j", "seed_index", "cover_count", "fitted_c0"};

    // fitted c0 per scale: the largest exponent valid across all 50 seeds
    double c0_by_i[2] = {0, 0};
    for (int idx = 0; idx < 2; ++idx) {
        const int i = 3 + idx;
        double c_min = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 50; ++t) {
            const RandomRealization omega(Dist::rademacher, rng::derive(0x777, t), std::int64_t(1) << 16);
            const ExceptionalCover cover =
                exceptional_cover(omega, i, 16, kExceptionalThreshold, kExceptionalCrossover);
            c_min = std::min(c_min, cover.fitted_c0);
            res.report.add_row({double(i), 16.0, double(t), double(cover.count()), cover.fitted_c0});
        }
        c0_by_i[idx] = c_min;
    }
    const double c3 = c0_by_i[0], c4 = c0_by_i[1];
    res.seconds = timer.seconds();
    const bool positive = c4 > 0 && c3 > 0;
    // stability: both values within +-20% of their midpoint
    const bool stable = std::abs(c3 - c4) <= 0.2 * (c3 + c4);
    res.passed = positive && stable;
    res.report.set("c0_i3", c3);
    res.report.set("c0_i4", c4);
    res.report.set_flag("c0_positive", positive);
    res.report.set_flag("c0_stable_within_20pct", stable);
    res.detail = "c0(i=3)=" + detail::fmt(c3) + " c0(i=4)=" + detail::fmt(c4) +
                 " (each within 20% of midpoint: " + (stable ? "yes" : "no") + ")";
    return res;
}

// --- criterion 11: ergodic tails ---------------------------------------------
inline CriterionResult criterion_ergodic_tails() {
    detail::Timer timer;
    CriterionResult res{11, "ergodic-tails", false, 0, "", {}};

    const RotationSystem rot{std::sqrt(2.0) - 1.0};
    const StepFunction f{{0.0, 0.5}, {cplx(0.5, 0.0), cplx(-0.5, 0.0)}};
    std::vector<double> xs;
    for (int t = 0; t < 64; ++t) xs.push_back(rng::unit(31337, std::uint64_t(t)));
    const TailProfile tp = tail_profile(rot, detail::shipped_phase(), f, xs, 1.0, 20);

    ExperimentReport rep = tail_profile_report(tp, 10.0);
    rep.name = "criterion11_ergodic_tails";
    res.seconds = timer.seconds();
    res.passed = tp.fit_valid && rep.flag("decay_negative") && rep.flag("tail_below_model");
    res.report = rep;
    res.detail = "fitted rate = " + detail::fmt(tp.fitted_rate) + ", tail@20 / model@20 = " +
                 detail::fmt(tp.max_running_tail_at_jmax / tp.model_at_jmax);
    return res;
}

// --- criterion 12: transference ----------------------------------------------
inline CriterionResult criterion_transference() {
    detail::Timer timer;
    CriterionResult res{12, "transference", false, 0, "", {}};

    rng::Stream gs(0x7AF);
    std::vector<cplx> v(600);
    for (auto& z : v) z = cplx(gs.uniform(-1, 1), gs.uniform(-1, 1));
    const FiniteSignal f(0, std::move(v));
    ExperimentReport rep = transference_check(detail::shipped_phase(), f, std::int64_t(1) << 10,
                                              IntWindow{-64, 2100}, 1e-12);
    rep.name = "criterion12_transference";
    res.seconds = timer.seconds();
    res.passed = rep.flag("pointwise_match") && rep.flag("maximal_match");
    res.report = rep;
    res.detail = "max |ergodic - discrete| = " + detail::fmt(rep.get("max_abs_difference"));
    return res;
}

inline std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    out.push_back(criterion_diag_decay());
    out.push_back(criterion_offdiag_decay());
    out.push_back(criterion_oracle_equivalence());
    CriterionResult c4, c5;
    criterion_sparse_pair(c4, c5);
    out.push_back(c4);
    out.push_back(c5);
    out.push_back(criterion_cz_invariants());
    out.push_back(criterion_rademacher_menshov());
    out.push_back(criterion_chernoff());
    out.push_back(criterion_random_correlations());
    out.push_back(criterion_exceptional_counting());
    out.push_back(criterion_ergodic_tails());
    out.push_back(criterion_transference());
    return out;
}

} // namespace oht::acceptance
