#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oht/generators.hpp"
#include "oht/operators.hpp"
#include "oht/reference.hpp"
#include "oht/rng.hpp"

using namespace oht;

namespace {

const AdmissiblePhase& phase32() {
    static const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
    return p;
}

CoeffSequence random_coeff(std::uint64_t seed) {
    return CoeffSequence::random_from(
        [seed](std::int64_t n) { return rng::unit(seed, std::uint64_t(n)) < 0.5 ? -1.0 : 1.0; },
        "rademacher");
}

} // namespace

TEST_CASE("truncated sums") {
    const CoeffSequence one = CoeffSequence::constant();
    SECTION("truncation beyond the support range vanishes") {
        const FiniteSignal f = FiniteSignal::indicator(0, 8);
        CHECK(truncated_sum(one, f, 100, {0, 50}).is_zero());
    }
    SECTION("harmonic kernel on a spike") {
        const FiniteSignal d = FiniteSignal::delta(0);
        const FiniteSignal t = truncated_sum(one, d, 1, {-4, 40});
        for (std::int64_t x = -4; x < 40; ++x) {
            if (x >= 1) CHECK_THAT(t.at(x).real(), Catch::Matchers::WithinRel(1.0 / double(x), 1e-14));
            else CHECK(t.at(x) == cplx{});
        }
    }
    SECTION("every truncation is dominated by the maximal function") {
        rng::Stream gen(17);
        for (int trial = 0; trial < 20; ++trial) {
            const FiniteSignal f = gen::complex_signal(gen.uniform_int(-20, 20), 64, gen.unit() * 1e9);
            const CoeffSequence a = random_coeff(0xA0 + trial);
            const IntWindow w = natural_window(f);
            const FiniteSignal hmax = hilbert_maximal(a, f, w);
            for (std::int64_t N : {1, 2, 5, 17, 60}) {
                const FiniteSignal tn = truncated_sum(a, f, N, w);
                for (std::int64_t x = w.begin; x < w.end; ++x)
                    CHECK(std::abs(tn.at(x)) <= hmax.at(x).real() + 1e-12);
            }
        }
    }
}

TEST_CASE("maximal truncation") {
    SECTION("zero coefficients give the zero signal") {
        const FiniteSignal f = FiniteSignal::indicator(-3, 9);
        CHECK(hilbert_maximal(CoeffSequence::constant(0.0), f, {-10, 30}).is_zero());
    }
    SECTION("harmonic maximal function of a spike") {
        const FiniteSignal h = hilbert_maximal(CoeffSequence::constant(), FiniteSignal::delta(0), {-5, 50});
        for (std::int64_t x = -5; x < 50; ++x) {
            if (x >= 1) CHECK_THAT(h.at(x).real(), Catch::Matchers::WithinRel(1.0 / double(x), 1e-14));
            else CHECK(h.at(x) == cplx{});
        }
    }
    SECTION("agrees with the exhaustive sweep on random instances") {
        for (int trial = 0; trial < 30; ++trial) {
            const std::uint64_t seed = rng::derive(0xB0, trial);
            rng::Stream gen(seed);
            const FiniteSignal f = gen::complex_signal(gen.uniform_int(-100, 100), 256, rng::derive(seed, 1));
            const CoeffSequence a = random_coeff(rng::derive(seed, 2));
            const IntWindow w = natural_window(f, 2);
            CHECK(max_abs_diff(hilbert_maximal(a, f, w),
                               reference::hilbert_maximal_bruteforce(a, f, w)) <= 1e-12);
        }
    }
    SECTION("positive homogeneity and subadditivity") {
        rng::Stream gen(31);
        for (int trial = 0; trial < 20; ++trial) {
            const FiniteSignal f = gen::complex_signal(-10, 48, rng::derive(0xC0, trial));
            const FiniteSignal g = gen::complex_signal(-10, 48, rng::derive(0xC1, trial));
            const CoeffSequence a = CoeffSequence::modulated(phase32());
            const cplx c(gen.uniform(-2, 2), gen.uniform(-2, 2));
            const IntWindow w{-20, 120};
            const FiniteSignal hf = hilbert_maximal(a, f, w);
            const FiniteSignal hcf = hilbert_maximal(a, f * c, w);
            const FiniteSignal hg = hilbert_maximal(a, g, w);
            const FiniteSignal hfg = hilbert_maximal(a, f + g, w);
            for (std::int64_t x = w.begin; x < w.end; ++x) {
                CHECK_THAT(hcf.at(x).real(),
                           Catch::Matchers::WithinAbs(std::abs(c) * hf.at(x).real(), 1e-10));
                CHECK(hfg.at(x).real() <= hf.at(x).real() + hg.at(x).real() + 1e-12);
            }
        }
    }
}

TEST_CASE("localized pieces") {
    const CoeffSequence a = CoeffSequence::modulated(phase32());
    SECTION("vanishing input on the enlargement gives zero") {
        const DyadicInterval I(6, 2); // scale 3
        const LocalizedOp op(I, a);
        const IntWindow e = op.enlarged();
        // mass strictly outside the enlargement
        const FiniteSignal f = FiniteSignal::indicator(e.end + 5, e.end + 25);
        CHECK(apply_localized(op, f).is_zero());
    }
    SECTION("locality: perturbations outside the enlargement are invisible") {
        const DyadicInterval I(5, 0); // [0, 32), scale 2, enlargement [-4, 32)
        rng::Stream gen(41);
        for (int trial = 0; trial < 10; ++trial) {
            const FiniteSignal f = gen::complex_signal(-10, 50, rng::derive(0xD0, trial));
            FiniteSignal g = f;
            g += FiniteSignal::delta(-5, cplx(gen.uniform(-3, 3), 1));  // left of enlargement
            g += FiniteSignal::delta(40, cplx(gen.uniform(-3, 3), 1));  // right of interval
            CHECK(max_abs_diff(apply_localized(LocalizedOp(I, a), f),
                               apply_localized(LocalizedOp(I, a), g)) == 0.0);
        }
    }
    SECTION("per-scale reconstruction is exact") {
        rng::Stream gen(47);
        for (int scale = 1; scale <= 6; ++scale) {
            const FiniteSignal f = gen::complex_signal(gen.uniform_int(-60, 60), 200, rng::derive(0xE0, scale));
            const FiniteSignal expected = convolve(block_measure(a, scale), f);
            FiniteSignal sum;
            for (const auto& I : scale_partition(scale + 3, 7, expected.begin(), expected.end()))
                sum += apply_localized(LocalizedOp(I, a), f);
            CHECK(max_abs_diff(sum, expected) < 1e-10);
        }
    }
    SECTION("spike at the interval center matches the direct definition") {
        const DyadicInterval I(7, 1); // [128, 256), scale 4
        const FiniteSignal f = FiniteSignal::delta(192);
        CHECK(max_abs_diff(apply_localized(LocalizedOp(I, a), f),
                           reference::apply_localized_direct(I, a, f)) == 0.0);
    }
    SECTION("interval length must be 2^{i+3}") {
        CHECK_THROWS_AS(LocalizedOp(DyadicInterval(6, 0), 2, a), std::invalid_argument);
        CHECK_NOTHROW(LocalizedOp(DyadicInterval(6, 0), 3, a));
    }
}

TEST_CASE("maximal sums over families") {
    const CoeffSequence a = CoeffSequence::modulated(phase32());
    SECTION("empty family") {
        CHECK(t_star(TruncationFamily(0), a, FiniteSignal::delta(3)).is_zero());
    }
    SECTION("single scale equals the absolute full sum") {
        const DyadicInterval I0(8, 0);
        TruncationFamily fam(0);
        for (const auto& I : scale_partition(6, 0, I0.begin(), I0.end())) fam.add(I);
        const FiniteSignal f = gen::complex_signal(10, 200, 0xF1);
        const FiniteSignal star = t_star(fam, a, f);
        const FiniteSignal full = t_full(fam, a, f);
        for (std::int64_t x = star.begin(); x < star.end(); ++x)
            CHECK_THAT(star.at(x).real(), Catch::Matchers::WithinAbs(std::abs(full.at(x)), 1e-12));
    }
    SECTION("the maximal sum dominates the full sum") {
        const DyadicInterval I0(9, 0);
        const TruncationFamily fam = TruncationFamily::all_dyadic_in(I0);
        const FiniteSignal f = restrict_to(gen::complex_signal(0, 512, 0xF2), 0, 512);
        const FiniteSignal star = t_star(fam, a, f);
        const FiniteSignal full = t_full(fam, a, f);
        for (std::int64_t x = 0; x < 512; ++x)
            CHECK(star.at(x).real() >= std::abs(full.at(x)) - 1e-12);
    }
    SECTION("mixed grids are rejected") {
        TruncationFamily fam(0);
        CHECK_THROWS_AS(fam.add(DyadicInterval(4, 0, 5)), std::invalid_argument);
    }
    SECTION("matches the explicit threshold sweep") {
        for (int trial = 0; trial < 10; ++trial) {
            rng::Stream gen(rng::derive(0xF3, trial));
            const DyadicInterval I0(8, gen.uniform_int(-2, 2), gen.uniform_int(-20, 20));
            const TruncationFamily full = TruncationFamily::all_dyadic_in(I0);
            TruncationFamily fam(I0.offset);
            for (const auto& [lvl, ivs] : full.by_level()) {
                (void)lvl;
                for (const auto& I : ivs)
                    if (gen.chance(0.6)) fam.add(I);
            }
            if (fam.empty()) continue;
            const FiniteSignal f = restrict_to(
                gen::complex_signal(I0.begin(), I0.length(), rng::derive(0xF4, trial)),
                I0.begin(), I0.end());
            CHECK(max_abs_diff(t_star(fam, a, f), reference::t_star_direct(fam, a, f)) <= 1e-11);
        }
    }
}

TEST_CASE("operator norm probe") {
    SECTION("zero coefficients estimate zero") {
        const ExperimentReport rep = opnorm_estimate(CoeffSequence::constant(0.0), 2.0, 3, 128, 1);
        CHECK(rep.get("estimate") == 0.0);
    }
    SECTION("r = 2 estimates are stable across sizes") {
        const CoeffSequence a = CoeffSequence::modulated(phase32());
        double lo = 1e300, hi = 0;
        for (std::int64_t size : {256, 512, 1024}) {
            const double est = opnorm_estimate(a, 2.0, 4, size, 0x5EED, 8).get("estimate");
            lo = std::min(lo, est);
            hi = std::max(hi, est);
        }
        CHECK(hi / lo < 2.0);
        CHECK(hi < 10.0);
    }
    SECTION("growth toward r = 1 stays within the envelope shape") {
        const CoeffSequence a = CoeffSequence::modulated(phase32());
        double worst = 0;
        for (double r : {1.1, 1.2, 1.5, 2.0})
            worst = std::max(worst, opnorm_estimate(a, r, 4, 512, 0x5EED, 8).get("estimate_over_envelope"));
        CHECK(worst < 4.0);
        CHECK_THROWS_AS(opnorm_estimate(a, 1.0, 1, 64, 0), std::domain_error);
    }
}
