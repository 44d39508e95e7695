#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "oht/kernel.hpp"
#include "oht/report.hpp"
#include "oht/rng.hpp"
#include "oht/signal.hpp"
#include "oht/sparse.hpp"

// Random coefficient sequences X_n, Chernoff tail verification, the almost
// sure correlation estimates for mu~_i * mu_j, exceptional-set covers, and
// the Main/Exceptional split diagnostics of the random sparse bound.

namespace oht {

enum class Dist { rademacher, uniform, centered_bernoulli };

inline const char* dist_name(Dist d) {
    switch (d) {
        case Dist::rademacher: return "rademacher";
        case Dist::uniform: return "uniform";
        case Dist::centered_bernoulli: return "centered_bernoulli";
    }
    return "?";
}

/// Deterministic map n -> X_n(omega): |X_n| <= 1, mean zero, independent
/// across n (counter-based generation keyed by (seed, n)).
class RandomRealization {
public:
    RandomRealization(Dist dist, std::uint64_t seed, std::int64_t n_max, double p = 0.5)
        : dist_(dist), seed_(seed), n_max_(n_max), p_(p) {
        if (n_max < 1) throw std::invalid_argument("RandomRealization: n_max >= 1 required");
        if (dist == Dist::centered_bernoulli && (p < 0 || p > 1))
            throw std::invalid_argument("RandomRealization: p in [0,1] required");
    }

    double operator()(std::int64_t n) const {
        const double u = rng::unit(seed_, std::uint64_t(n));
        switch (dist_) {
            case Dist::rademacher: return u < 0.5 ? -1.0 : 1.0;
            case Dist::uniform: return 2.0 * u - 1.0;
            case Dist::centered_bernoulli: return u < p_ ? 1.0 - p_ : -p_;
        }
        return 0.0;
    }

    /// E |X_n|^2 of the generating distribution.
    double second_moment() const {
        switch (dist_) {
            case Dist::rademacher: return 1.0;
            case Dist::uniform: return 1.0 / 3.0;
            case Dist::centered_bernoulli: return p_ * (1.0 - p_);
        }
        return 0.0;
    }

    CoeffSequence as_coeff() const {
        const RandomRealization self = *this;
        return CoeffSequence::random_from([self](std::int64_t n) { return self(n); },
                                          std::string(dist_name(dist_)) + "/" + std::to_string(seed_));
    }

    Dist dist() const noexcept { return dist_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::int64_t n_max() const noexcept { return n_max_; }

private:
    Dist dist_;
    std::uint64_t seed_;
    std::int64_t n_max_;
    double p_;
};

inline RandomRealization sample_sequence(Dist dist, std::uint64_t seed, std::int64_t n_max,
                                         double p = 0.5) {
    return RandomRealization(dist, seed, n_max, p);
}

/// Monte Carlo tails P(|sum_{n<=N} Z_n| >= A) against the large-deviation
/// shape max{ exp(-c A^2/V_N), exp(-c A) }.  Two fits are published: the
/// largest c valid on the observed points, and the same with unobserved
/// tails replaced by the rule-of-three bound 3/trials.
inline ExperimentReport chernoff_check(Dist dist, std::int64_t N, const std::vector<double>& A_grid,
                                       int trials, std::uint64_t seed, double prefactor = 1.0) {
    if (trials < 1000) throw std::invalid_argument("chernoff_check: trials >= 1000 required");
    if (N < 1) throw std::invalid_argument("chernoff_check: N >= 1 required");

    std::vector<double> sums(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) {
        const RandomRealization z(dist, rng::derive(seed, std::uint64_t(t)), N);
        double s = 0;
        for (std::int64_t n = 1; n <= N; ++n) s += z(n);
        sums[std::size_t(t)] = std::abs(s);
    }

    const double V = double(N) * RandomRealization(dist, 0, 1).second_moment();
    ExperimentReport rep;
    rep.name = "chernoff[" + std::string(dist_name(dist)) + "]";
    rep.columns = {"A", "count", "empirical_tail", "c_fit"};

    const double floor_p = 3.0 / double(trials);
    double c_observed = -1, c_rule3 = -1;
    double prev_tail = 2.0;
    bool monotone = true;
    for (const double A : A_grid) {
        std::int64_t count = 0;
        for (const double s : sums)
            if (s >= A) ++count;
        const double tail = double(count) / double(trials);
        if (tail > prev_tail + 1e-15) monotone = false;
        prev_tail = tail;

        double c_here = std::numeric_limits<double>::quiet_NaN();
        if (A > 0) {
            auto c_for = [&](double p_used) {
                const double l = std::log(prefactor / p_used);
                return std::max(V * l / (A * A), l / A);
            };
            if (count > 0) {
                c_here = c_for(tail);
                c_observed = c_observed < 0 ? c_here : std::min(c_observed, c_here);
                c_rule3 = c_rule3 < 0 ? c_here : std::min(c_rule3, c_here);
            } else {
                const double c3 = c_for(floor_p);
                c_rule3 = c_rule3 < 0 ? c3 : std::min(c_rule3, c3);
            }
        }
        rep.add_row({A, double(count), tail, c_here});
    }
    rep.set("N", double(N));
    rep.set("V_N", V);
    rep.set("trials", double(trials));
    rep.set("prefactor", prefactor);
    if (c_observed >= 0) rep.set("c_fit_observed", c_observed);
    if (c_rule3 >= 0) rep.set("c_fit_rule3", c_rule3);
    // smallest multiplicative constant making the bound dominate at the
    // fitted exponent (1 when the fit is binding)
    {
        const double c = std::max(c_observed, 0.0);
        double req = 0;
        for (const auto& row : rep.rows) {
            const double A = row[0], tail = row[2];
            if (A <= 0 || tail <= 0) continue;
            const double bound = std::max(std::exp(-c * A * A / V), std::exp(-c * A));
            req = std::max(req, tail / bound);
        }
        rep.set("required_prefactor", req);
    }
    rep.set_flag("tails_monotone", monotone);
    return rep;
}

/// mu~_i * mu_j for one realization (i <= j).
inline FiniteSignal random_cross_correlation(const RandomRealization& omega, int i, int j) {
    if (i > j) throw std::invalid_argument("random_cross_correlation: i <= j required");
    const CoeffSequence a = omega.as_coeff();
    return convolve(reflect_conj(block_measure(a, i)), block_measure(a, j));
}

/// Over fresh seeds: diagonal sup_{x != 0} |mu~_i * mu_i| against
/// C 2^{-5i/4}, or off-diagonal sup |mu~_i * mu_j| against
/// C sqrt(j) 2^{-i/2-j}.  Also asserts the trivial bound
/// sup <= ||mu_i||_1 2^{1-j} exactly, per realization.
inline ExperimentReport random_correlation_report(Dist dist, int i, int j, int n_seeds,
                                                  std::uint64_t seed0, double C,
                                                  double quantile = 0.95) {
    if (i > j) throw std::invalid_argument("random_correlation_report: i <= j required");
    if (n_seeds < 1) throw std::invalid_argument("random_correlation_report: need seeds");
    ExperimentReport rep;
    rep.name = "random_correlation[" + std::string(dist_name(dist)) + "]";
    rep.columns = {"seed", "i", "j", "sup", "bound", "pass"};

    const double base_bound = (i == j)
        ? std::pow(2.0, -1.25 * double(i))
        : std::sqrt(double(j)) * std::pow(2.0, -0.5 * double(i) - double(j));
    int passes = 0;
    bool trivial_ok = true;
    for (int t = 0; t < n_seeds; ++t) {
        const RandomRealization omega(dist, rng::derive(seed0, std::uint64_t(t)), std::int64_t(1) << j);
        const FiniteSignal corr = random_cross_correlation(omega, i, j);
        const double sup = (i == j) ? corr.sup_off_zero() : corr.linf();
        const double trivial = block_measure(omega.as_coeff(), i).l1() * std::pow(2.0, 1.0 - double(j));
        if (corr.linf() > trivial * (1.0 + 1e-12)) trivial_ok = false;
        const bool ok = sup <= C * base_bound;
        passes += ok ? 1 : 0;
        rep.add_row({double(t), double(i), double(j), sup, C * base_bound, ok ? 1.0 : 0.0});
    }
    const double fraction = double(passes) / double(n_seeds);
    rep.set("i", double(i));
    rep.set("j", double(j));
    rep.set("C", C);
    rep.set("fraction_within_bound", fraction);
    rep.set_flag("quantile_ok", fraction >= quantile);
    rep.set_flag("trivial_bound_ok", trivial_ok);
    return rep;
}

/// Largest normalized sup over seeds and scales; used to calibrate the
/// constant C of the correlation report on small scales.
inline double calibrate_correlation_constant(Dist dist, const std::vector<std::pair<int, int>>& scales,
                                             int n_seeds, std::uint64_t seed0) {
    double C = 0;
    for (const auto& [i, j] : scales) {
        const double base = (i == j)
            ? std::pow(2.0, -1.25 * double(i))
            : std::sqrt(double(j)) * std::pow(2.0, -0.5 * double(i) - double(j));
        for (int t = 0; t < n_seeds; ++t) {
            const RandomRealization omega(dist, rng::derive(seed0, std::uint64_t(t)), std::int64_t(1) << j);
            const FiniteSignal corr = random_cross_correlation(omega, i, j);
            const double sup = (i == j) ? corr.sup_off_zero() : corr.linf();
            C = std::max(C, sup / base);
        }
    }
    return C;
}

/// Cover of the exceptional set Z_{i,j} = { x in [0, 2^j) :
/// |mu~_i * mu_j(x)| > threshold_factor 2^{-i/4-j} } by disjoint aligned
/// cells of length 2^i.
struct ExceptionalCover {
    int i = 0, j = 0;
    double threshold = 0;
    std::vector<std::int64_t> cell_begins; // each cell is [b, b + 2^i)
    std::int64_t marked_points = 0;
    double fitted_c0 = 0; // ln(2^{j-i} / max(count,1)) / 2^{i/2}

    std::int64_t count() const noexcept { return std::int64_t(cell_begins.size()); }
};

inline ExceptionalCover exceptional_cover(const RandomRealization& omega, int i, int j,
                                          double threshold_factor, double crossover_factor = 4.0,
                                          int max_scan_log2 = 24) {
    if (i < 1 || j < i) throw std::invalid_argument("exceptional_cover: 1 <= i <= j required");
    if (double(j) < crossover_factor * std::pow(2.0, double(i) / 2.0))
        throw std::invalid_argument("exceptional_cover: requires j >= factor * 2^{i/2}");
    if (j > max_scan_log2) throw std::runtime_error("exceptional_cover: scale budget exceeded");

    ExceptionalCover cover;
    cover.i = i;
    cover.j = j;
    cover.threshold = threshold_factor * std::pow(2.0, -0.25 * double(i) - double(j));

    const FiniteSignal corr = random_cross_correlation(omega, i, j);
    const std::int64_t cell_len = std::int64_t(1) << i;
    std::int64_t last_cell = std::numeric_limits<std::int64_t>::min();
    const std::int64_t scan_end = std::int64_t(1) << j;
    for (std::int64_t x = std::max<std::int64_t>(0, corr.begin()); x < std::min(scan_end, corr.end()); ++x) {
        if (std::abs(corr.at(x)) > cover.threshold) {
            ++cover.marked_points;
            const std::int64_t cell = x >> i;
            if (cell != last_cell) {
                cover.cell_begins.push_back(cell * cell_len);
                last_cell = cell;
            }
        }
    }
    const double budget = std::pow(2.0, double(j - i));
    cover.fitted_c0 = std::log(budget / double(std::max<std::int64_t>(cover.count(), 1)))
                      / std::pow(2.0, double(i) / 2.0);
    return cover;
}

/// Pairing diagnostics for the random sparse bound: run the sparse recursion
/// with a random realization, then split every layered interval pair
/// (I in M_u, J in M_v, I inside J) of the non-standard machinery into its
/// Main and Exceptional parts according to whether the correlation lag falls
/// in Z_{k_u,k_v}.
struct RandomSparseOptions {
    double r = 1.5;
    double cz_threshold = 10.0;
    double exceptional_threshold = 1.5;
    double crossover_factor = 1.0; // experiment-scale crossover; the cover's own default is 4
    int s_max = 8;
    std::size_t max_pairs = 20000;
};

inline ExperimentReport random_sparse_experiment(const RandomRealization& omega,
                                                 const FiniteSignal& f, const FiniteSignal& g,
                                                 const DyadicInterval& I0,
                                                 RandomSparseOptions opts = {}) {
    ExperimentReport rep;
    rep.name = "random_sparse[" + std::string(dist_name(omega.dist())) + "]";
    rep.columns = {"k_u", "pairs", "main_mass", "exceptional_mass", "exceptional_fraction"};

    const CoeffSequence a = omega.as_coeff();
    const SparseBuildResult build = build_sparse_collection(a, f, g, I0, opts.r);
    rep.set("ratio", build.ratio);
    rep.set("ratio_times_rm1", build.ratio * (opts.r - 1.0));
    rep.set_flag("measure_bound_ok", build.measure_ok);

    const CZDecomposition decomp = cz_decompose(f, I0, opts.cz_threshold);
    if (decomp.levels.empty()) {
        rep.set("total_pairs", 0.0);
        return rep;
    }

    // epsilon and C0 measured on this realization's diagonal
    double C0 = 1.0, eps_hat = 0.25;
    {
        const ExperimentReport diag = diag_decay_report(a, 5, 10);
        if (diag.get("degenerate_fit") == 0.0) {
            C0 = std::max(diag.get("C0"), 1e-12);
            eps_hat = std::max(diag.get("eps_hat"), 0.0);
        }
    }

    struct Bin { std::int64_t pairs = 0; double main_mass = 0, exc_mass = 0; };
    std::map<int, Bin> bins;
    std::size_t pairs_done = 0;

    // cache of exceptional covers per scale pair
    std::map<std::pair<int, int>, std::vector<bool>> z_cells;
    auto z_lookup = [&](int ku, int kv) -> const std::vector<bool>* {
        if (double(kv) < opts.crossover_factor * std::pow(2.0, double(ku) / 2.0)) return nullptr;
        const auto key = std::make_pair(ku, kv);
        auto it = z_cells.find(key);
        if (it == z_cells.end()) {
            ExceptionalCover cover = exceptional_cover(omega, ku, kv, opts.exceptional_threshold,
                                                       opts.crossover_factor);
            std::vector<bool> cells(std::size_t(1) << (kv - ku), false);
            for (const std::int64_t b : cover.cell_begins)
                cells[std::size_t(b >> ku)] = true;
            it = z_cells.emplace(key, std::move(cells)).first;
        }
        return &it->second;
    };

    for (int s = 0; s <= opts.s_max && pairs_done < opts.max_pairs; ++s) {
        IntervalClassification cls;
        try {
            cls = classify_intervals(decomp, a, s, C0, eps_hat);
        } catch (const std::logic_error&) {
            continue;
        }
        // every mass-carrying interval pair (I inside J) of the working
        // family at this offset contributes one inner-product split
        std::vector<ClassifiedInterval> working = cls.standard;
        working.insert(working.end(), cls.nonstandard.begin(), cls.nonstandard.end());
        for (const auto& ci : working) {
            for (const auto& cj : working) {
                const DyadicInterval& I = ci.interval;
                const DyadicInterval& J = cj.interval;
                if (I.level >= J.level || !J.contains(I) || pairs_done >= opts.max_pairs) continue;
                const int ku = I.level - 3, kv = J.level - 3;
                const auto itI = decomp.levels.find(ci.cz_level);
                const auto itJ = decomp.levels.find(cj.cz_level);
                if (itI == decomp.levels.end() || itJ == decomp.levels.end()) continue;
                const LocalizedOp opI(I, a), opJ(J, a);
                const IntWindow eI = opI.enlarged(), eJ = opJ.enlarged();
                const FiniteSignal bi = restrict_to(itI->second, eI.begin, eI.end);
                const FiniteSignal bj = restrict_to(itJ->second, eJ.begin, eJ.end);
                if (bi.is_zero() || bj.is_zero()) continue;
                ++pairs_done;
                const FiniteSignal corr = random_cross_correlation(omega, ku, kv);
                const std::vector<bool>* z = z_lookup(ku, kv);
                cplx main{}, exc{};
                for (std::int64_t x = bi.begin(); x < bi.end(); ++x) {
                    const cplx bx = bi.at(x);
                    if (bx == cplx{}) continue;
                    for (std::int64_t y = bj.begin(); y < bj.end(); ++y) {
                        const cplx by = bj.at(y);
                        if (by == cplx{}) continue;
                        const std::int64_t d = x - y; // lag of mu~_{ku} * mu_{kv}
                        const cplx kern = std::conj(corr.at(d));
                        if (kern == cplx{}) continue;
                        const cplx contrib = bx * std::conj(by) * kern;
                        const bool in_z = z != nullptr && d >= 0 && d < (std::int64_t(1) << kv)
                                          && (*z)[std::size_t(d >> ku)];
                        (in_z ? exc : main) += contrib;
                    }
                }
                Bin& bin = bins[ku];
                ++bin.pairs;
                bin.main_mass += std::abs(main);
                bin.exc_mass += std::abs(exc);
            }
        }
    }

    double total_main = 0, total_exc = 0;
    for (const auto& [ku, bin] : bins) {
        const double denom = bin.main_mass + bin.exc_mass;
        rep.add_row({double(ku), double(bin.pairs), bin.main_mass, bin.exc_mass,
                     denom > 0 ? bin.exc_mass / denom : 0.0});
        total_main += bin.main_mass;
        total_exc += bin.exc_mass;
    }
    rep.set("total_pairs", double(pairs_done));
    rep.set("total_main_mass", total_main);
    rep.set("total_exceptional_mass", total_exc);
    rep.set("exceptional_fraction",
            total_main + total_exc > 0 ? total_exc / (total_main + total_exc) : 0.0);
    return rep;
}

} // namespace oht
