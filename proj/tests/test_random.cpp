#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "oht/generators.hpp"
#include "oht/random_ht.hpp"
#include "oht/rng.hpp"

using namespace oht;

TEST_CASE("random realizations") {
    SECTION("rademacher takes values in {-1, +1}") {
        const RandomRealization x(Dist::rademacher, 42, 1000);
        for (std::int64_t n = 1; n <= 1000; ++n)
            CHECK((x(n) == 1.0 || x(n) == -1.0));
    }
    SECTION("same seed, same sequence") {
        const RandomRealization a(Dist::uniform, 7, 100000);
        const RandomRealization b(Dist::uniform, 7, 100000);
        for (std::int64_t n : {1, 17, 9999, 100000}) CHECK(a(n) == b(n));
        const RandomRealization c(Dist::uniform, 8, 100);
        bool differs = false;
        for (std::int64_t n = 1; n <= 100; ++n)
            if (a(n) != c(n)) differs = true;
        CHECK(differs);
    }
    SECTION("empirical mean within four standard errors") {
        for (Dist d : {Dist::rademacher, Dist::uniform}) {
            const std::int64_t N = 100000;
            const RandomRealization x(d, 1234, N);
            double mean = 0;
            for (std::int64_t n = 1; n <= N; ++n) mean += x(n);
            mean /= double(N);
            const double sigma = std::sqrt(x.second_moment() / double(N));
            CHECK(std::abs(mean) <= 4.0 * sigma);
        }
    }
    SECTION("centered bernoulli") {
        const RandomRealization x(Dist::centered_bernoulli, 5, 1000, 0.25);
        for (std::int64_t n = 1; n <= 1000; ++n)
            CHECK((x(n) == 0.75 || x(n) == -0.25));
        const RandomRealization zero(Dist::centered_bernoulli, 5, 1000, 0.0);
        for (std::int64_t n = 1; n <= 100; ++n) CHECK(zero(n) == 0.0);
    }
    SECTION("bad parameters") {
        CHECK_THROWS_AS(RandomRealization(Dist::rademacher, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(RandomRealization(Dist::centered_bernoulli, 1, 10, 1.5), std::invalid_argument);
    }
}

TEST_CASE("Chernoff tail checks") {
    SECTION("A = 0 has empirical probability one") {
        const ExperimentReport rep = chernoff_check(Dist::rademacher, 100, {0.0, 5.0, 10.0}, 1000, 99);
        CHECK(rep.rows[0][2] == 1.0);
        CHECK(rep.flag("tails_monotone"));
    }
    SECTION("degenerate single summand: the fit collapses, prefactor reported") {
        const ExperimentReport rep = chernoff_check(Dist::rademacher, 1, {1.0}, 1000, 7);
        CHECK(rep.rows[0][2] == 1.0);           // |Z_1| = 1 always
        CHECK(rep.get("c_fit_observed") == 0.0); // only c = 0 dominates with prefactor 1
        CHECK(rep.get("required_prefactor") >= 1.0);
    }
    SECTION("tails shrink with A and the fit is positive for real sums") {
        const std::int64_t N = 1000;
        std::vector<double> grid;
        for (int k = 1; k <= 4; ++k) grid.push_back(double(k) * std::sqrt(double(N)));
        const ExperimentReport rep = chernoff_check(Dist::rademacher, N, grid, 4000, 1337);
        CHECK(rep.flag("tails_monotone"));
        CHECK(rep.get("c_fit_rule3") > 0.0);
    }
    SECTION("too few trials rejected") {
        CHECK_THROWS_AS(chernoff_check(Dist::rademacher, 10, {1.0}, 10, 1), std::invalid_argument);
    }
}

TEST_CASE("random correlation reports") {
    SECTION("degenerate realization has zero correlations") {
        const ExperimentReport rep = random_correlation_report(Dist::centered_bernoulli, 6, 6, 5, 1, 1.0);
        // p defaults to 1/2; build an explicitly zero variant instead
        const RandomRealization zero(Dist::centered_bernoulli, 3, 1 << 7, 0.0);
        CHECK(random_cross_correlation(zero, 6, 7).is_zero());
        (void)rep;
    }
    SECTION("diagonal quantile with a calibrated constant") {
        const double C = calibrate_correlation_constant(Dist::rademacher, {{6, 6}, {7, 7}}, 60, 0x99);
        const ExperimentReport rep = random_correlation_report(Dist::rademacher, 10, 10, 60, 0x9A, C);
        CHECK(rep.get("fraction_within_bound") >= 0.95);
        CHECK(rep.flag("trivial_bound_ok"));
    }
    SECTION("off-diagonal support and trivial bound") {
        const RandomRealization omega(Dist::rademacher, 0xBEEF, 1 << 12);
        const FiniteSignal corr = random_cross_correlation(omega, 6, 12);
        CHECK(corr.begin() >= 0);
        CHECK(corr.end() <= (std::int64_t(1) << 12));
        const double trivial = block_measure(omega.as_coeff(), 6).l1() * std::pow(2.0, -11.0);
        CHECK(corr.linf() <= trivial + 1e-15);
        CHECK_THROWS_AS(random_cross_correlation(omega, 12, 6), std::invalid_argument);
    }
}

TEST_CASE("exceptional covers") {
    SECTION("zero realization yields an empty cover") {
        const RandomRealization zero(Dist::centered_bernoulli, 1, 1 << 16, 0.0);
        const ExceptionalCover cover = exceptional_cover(zero, 4, 16, 1.5);
        CHECK(cover.count() == 0);
        CHECK(cover.marked_points == 0);
    }
    SECTION("covers are complete and disjoint") {
        for (int t = 0; t < 10; ++t) {
            const RandomRealization omega(Dist::rademacher, rng::derive(0xAB, t), 1 << 16);
            const ExceptionalCover cover = exceptional_cover(omega, 4, 16, 1.2);
            // disjoint: distinct aligned cells
            std::set<std::int64_t> cells(cover.cell_begins.begin(), cover.cell_begins.end());
            CHECK(cells.size() == cover.cell_begins.size());
            for (const auto b : cover.cell_begins) CHECK(b % 16 == 0);
            // complete: exhaustive re-scan of the definition
            const FiniteSignal corr = random_cross_correlation(omega, 4, 16);
            std::int64_t marked = 0;
            for (std::int64_t x = 0; x < (std::int64_t(1) << 16); ++x) {
                if (std::abs(corr.at(x)) > cover.threshold) {
                    ++marked;
                    CHECK(cells.count((x >> 4) << 4) == 1);
                }
            }
            CHECK(marked == cover.marked_points);
        }
    }
    SECTION("preconditions") {
        const RandomRealization omega(Dist::rademacher, 9, 1 << 16);
        CHECK_THROWS_AS(exceptional_cover(omega, 8, 16, 1.5, 4.0), std::invalid_argument);
        CHECK_THROWS_AS(exceptional_cover(omega, 4, 30, 1.5, 4.0, 24), std::runtime_error);
    }
}

TEST_CASE("random sparse experiment") {
    const DyadicInterval I0(12, 0);
    SECTION("zero realization dominates trivially") {
        const RandomRealization zero(Dist::centered_bernoulli, 2, 1 << 20, 0.0);
        const FiniteSignal f = gen::bumpy_profile(I0, 0x91);
        const FiniteSignal g = gen::bumpy_profile(I0, 0x92);
        const ExperimentReport rep = random_sparse_experiment(zero, f, g, I0);
        CHECK(rep.get("ratio") == 0.0);
        CHECK(rep.flag("measure_bound_ok"));
    }
    SECTION("rademacher kernels: bounded shape constant and a populated split") {
        double worst = 0;
        double total_pairs = 0;
        for (int t = 0; t < 10; ++t) {
            const RandomRealization omega(Dist::rademacher, rng::derive(0x93, t), 1 << 20);
            const FiniteSignal f = gen::spike_mix(I0, rng::derive(0x94, t));
            const FiniteSignal g = gen::bumpy_profile(I0, rng::derive(0x95, t));
            const ExperimentReport rep = random_sparse_experiment(omega, f, g, I0);
            CHECK(rep.flag("measure_bound_ok"));
            worst = std::max(worst, rep.get("ratio_times_rm1"));
            total_pairs += rep.get("total_pairs");
            const double frac = rep.get("exceptional_fraction");
            CHECK(frac >= 0.0);
            CHECK(frac <= 1.0);
        }
        CHECK(worst > 0.0);
        CHECK(worst < 4.0);
        CHECK(total_pairs > 0.0);
    }
    SECTION("deterministic given the seed") {
        const RandomRealization omega(Dist::rademacher, 77, 1 << 20);
        const FiniteSignal f = gen::spike_mix(I0, 0x96);
        const FiniteSignal g = gen::bumpy_profile(I0, 0x97);
        const ExperimentReport r1 = random_sparse_experiment(omega, f, g, I0);
        const ExperimentReport r2 = random_sparse_experiment(omega, f, g, I0);
        CHECK(r1.to_csv() == r2.to_csv());
        CHECK(r1.get("ratio") == r2.get("ratio"));
    }
    SECTION("crossover sensitivity is reportable") {
        const RandomRealization omega(Dist::rademacher, 99, 1 << 20);
        const FiniteSignal f = gen::spike_mix(I0, 0x98);
        const FiniteSignal g = gen::bumpy_profile(I0, 0x99);
        for (double factor : {1.0, 1.5, 2.0}) {
            RandomSparseOptions opts;
            opts.crossover_factor = factor;
            const ExperimentReport rep = random_sparse_experiment(omega, f, g, I0, opts);
            CHECK(rep.get("exceptional_fraction") >= 0.0);
        }
    }
}
