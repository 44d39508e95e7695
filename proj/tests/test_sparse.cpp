#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oht/generators.hpp"
#include "oht/reference.hpp"
#include "oht/rng.hpp"
#include "oht/sparse.hpp"

using namespace oht;

namespace {

const CoeffSequence& mod32() {
    static const CoeffSequence a = CoeffSequence::modulated(AdmissiblePhase::monomial(1.0, 1.5));
    return a;
}

} // namespace

TEST_CASE("range sets") {
    RangeSet r = RangeSet::interval(0, 100);
    r.subtract(10, 20);
    r.subtract(50, 60);
    CHECK(r.count() == 80);
    CHECK(r.contains(5));
    CHECK_FALSE(r.contains(15));
    RangeSet other = RangeSet::interval(15, 18);
    CHECK_FALSE(r.intersects(other));
    other.unite(RangeSet::interval(19, 25));
    CHECK(r.intersects(other));
    r.unite(RangeSet::interval(10, 20));
    CHECK(r.count() == 90);
}

TEST_CASE("sparse forms") {
    const DyadicInterval I(6, 0); // [0, 64)
    SECTION("single interval with indicators") {
        SparseCollection coll;
        coll.members.push_back({I, RangeSet::interval(0, 64)});
        coll.certified = true;
        const FiniteSignal one = FiniteSignal::indicator(0, 64);
        const SparseFormValue v = sparse_form(coll, one, one, 1.0, 1.0);
        CHECK_THAT(v.value, Catch::Matchers::WithinAbs(64.0, 1e-12));
        CHECK(v.certified_input);
    }
    SECTION("empty collection") {
        CHECK(sparse_form(SparseCollection{}, FiniteSignal::delta(0), FiniteSignal::delta(0), 1, 1).value == 0.0);
    }
    SECTION("nested pair matches hand enumeration") {
        const DyadicInterval child(5, 0); // [0, 32)
        SparseCollection coll;
        coll.members.push_back({I, RangeSet::interval(32, 64)});
        coll.members.push_back({child, RangeSet::interval(0, 32)});
        const FiniteSignal f = gen::bumpy_profile(DyadicInterval(6, 0), 0x11);
        const FiniteSignal g = gen::scattered_profile(DyadicInterval(6, 0), 0x12);
        const double expect = 64.0 * average(f, I, 1.0) * average(g, I, 1.5) +
                              32.0 * average(f, child, 1.0) * average(g, child, 1.5);
        const SparseFormValue v = sparse_form(coll, f, g, 1.0, 1.5);
        CHECK_THAT(v.value, Catch::Matchers::WithinRel(expect, 1e-12));
        CHECK_FALSE(v.certified_input); // not marked certified
    }
}

TEST_CASE("greedy certification") {
    SECTION("pairwise disjoint intervals keep their full length") {
        std::vector<DyadicInterval> ivs{{4, 0}, {4, 2}, {5, 4}};
        const CertifyResult res = certify_sparse(ivs);
        REQUIRE(res.ok);
        for (const auto& m : res.collection.members)
            CHECK(m.designated.count() == m.interval.length());
    }
    SECTION("an interval fully covered by its children fails") {
        std::vector<DyadicInterval> ivs{{6, 0}};
        for (std::int64_t q = 0; q < 4; ++q) ivs.emplace_back(4, q);
        const CertifyResult res = certify_sparse(ivs);
        REQUIRE_FALSE(res.ok);
        REQUIRE(res.violator.has_value());
        CHECK(*res.violator == DyadicInterval(6, 0)); // E of the big interval is empty
    }
    SECTION("one nested child is fine") {
        std::vector<DyadicInterval> ivs{{6, 0}, {4, 1}};
        const CertifyResult res = certify_sparse(ivs);
        REQUIRE(res.ok);
        CHECK(res.collection.members[1].designated.count() == 48);
    }
}

TEST_CASE("Calderon-Zygmund decomposition") {
    const DyadicInterval I0(12, 0);
    SECTION("constant signals have no stopping intervals") {
        const FiniteSignal f = FiniteSignal::indicator(0, 4096, cplx(0.7, 0));
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        CHECK(d.stopping.empty());
        CHECK(d.levels.empty());
        CHECK(d.good == f);
    }
    SECTION("single tall spike stops at the scan-oracle interval") {
        const FiniteSignal f = FiniteSignal::delta(1234, cplx(4096.0, 0));
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        const auto oracle = reference::maximal_stopping_scan(f, I0, 10.0 * average(f, I0));
        REQUIRE(d.stopping.size() == oracle.size());
        REQUIRE(d.stopping.size() == 1);
        CHECK(d.stopping[0] == oracle[0]);
        CHECK(d.stopping[0].length() == 256); // first length with average >= 10
        CHECK(d.stopping[0].contains(1234));
    }
    SECTION("stopping family equals the exhaustive scan on random profiles") {
        for (int t = 0; t < 10; ++t) {
            const FiniteSignal f = gen::spike_mix(I0, rng::derive(0x21, t));
            const CZDecomposition d = cz_decompose(f, I0, 10.0);
            const auto oracle = reference::maximal_stopping_scan(f, I0, 10.0 * d.root_average);
            REQUIRE(d.stopping.size() == oracle.size());
            for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(d.stopping[i] == oracle[i]);
        }
    }
    SECTION("reconstruction and level bounds on random profiles") {
        for (int t = 0; t < 20; ++t) {
            const FiniteSignal f = (t % 2 == 0) ? gen::bumpy_profile(I0, rng::derive(0x22, t))
                                                : gen::multiscale_spikes(I0, rng::derive(0x23, t));
            const CZDecomposition d = cz_decompose(f, I0, 10.0);
            CHECK(max_abs_diff(d.good + d.bad(), f) == 0.0);
            double sum_b1 = 0;
            for (const auto& [s, bs] : d.levels) {
                CHECK(bs.linf() <= 2.0 * 10.0 * std::pow(2.0, double(s)) * d.root_average + 1e-9);
                sum_b1 += bs.l1();
                // levels live exactly on stopping intervals of that length
                for (std::int64_t x = bs.begin(); x < bs.end(); ++x) {
                    if (bs.at(x) == cplx{}) continue;
                    bool covered = false;
                    for (const auto& J : d.stopping)
                        if (J.level == s && J.contains(x)) covered = true;
                    CHECK(covered);
                }
            }
            CHECK(sum_b1 <= double(I0.length()) * d.root_average + 1e-9);
            CHECK(d.good.linf() <= 2.0 * 10.0 * d.root_average + 1e-9);
        }
    }
    SECTION("contract violations") {
        const FiniteSignal f = FiniteSignal::indicator(0, 16);
        CHECK_THROWS_AS(cz_decompose(f, I0, 1.0), std::domain_error);
        CHECK_THROWS_AS(cz_decompose(FiniteSignal::delta(0, cplx(-1, 0)), I0, 10.0), std::invalid_argument);
        CHECK_THROWS_AS(cz_decompose(FiniteSignal::delta(-7), I0, 10.0), std::invalid_argument);
    }
}

TEST_CASE("sparse recursion") {
    const DyadicInterval I0(12, 0);
    SECTION("flat inputs stop immediately") {
        const FiniteSignal one = FiniteSignal::indicator(0, 4096);
        const SparseBuildResult res = build_sparse_collection(mod32(), one, one, I0, 1.5);
        REQUIRE(res.collection.size() == 1);
        CHECK(res.collection.members[0].interval == I0);
        CHECK(res.collection.members[0].designated.count() == I0.length());
    }
    SECTION("a lone spike produces a nested chain down to the minimum scale") {
        const FiniteSignal f = FiniteSignal::delta(100, cplx(1e6, 0));
        const FiniteSignal g = FiniteSignal::indicator(0, 4096, cplx(0.5, 0));
        SparseBuildOptions opts;
        opts.compute_ratio = false;
        const SparseBuildResult res = build_sparse_collection(mod32(), f, g, I0, 1.5, opts);
        CHECK(res.measure_ok);
        // the chain descends all the way to the minimum scale at the spike
        int min_level = I0.level;
        for (const auto& m : res.collection.members) {
            CHECK(m.interval.contains(100));
            min_level = std::min(min_level, m.interval.level);
        }
        CHECK(min_level == kMinDyadicLevel);
        CHECK(res.max_depth >= 2);
    }
    SECTION("zero mass returns the empty collection") {
        CHECK(build_sparse_collection(mod32(), FiniteSignal(), FiniteSignal::delta(5), I0, 1.2)
                  .collection.size() == 0);
    }
    SECTION("measure bound and certification on random pairs") {
        for (int t = 0; t < 15; ++t) {
            const FiniteSignal f = gen::bumpy_profile(I0, rng::derive(0x31, t));
            const FiniteSignal g = gen::scattered_profile(I0, rng::derive(0x32, t));
            const SparseBuildResult res = build_sparse_collection(mod32(), f, g, I0, 1.3);
            CHECK(res.measure_ok);
            CHECK(res.worst_child_measure <= 0.2 + 1e-12);
            std::vector<DyadicInterval> ivs;
            for (const auto& m : res.collection.members) ivs.push_back(m.interval);
            CHECK(certify_sparse(ivs).ok);
            CHECK(res.ratio >= 0);
            if (res.pairing > 0) CHECK(res.ratio > 0);
        }
    }
}

TEST_CASE("interval classification") {
    const DyadicInterval I0(12, 0);
    SECTION("no bad part means nothing to classify") {
        const FiniteSignal f = FiniteSignal::indicator(0, 4096, cplx(0.9, 0));
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        const IntervalClassification cls = classify_intervals(d, mod32(), 1, 1.0, 0.2);
        CHECK(cls.standard.empty());
        CHECK(cls.nonstandard.empty());
    }
    SECTION("norms are exact and buckets partition the non-standard family") {
        const FiniteSignal f = gen::multiscale_spikes(I0, 0x41);
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        REQUIRE_FALSE(d.levels.empty());
        for (int s = 0; s <= 5; ++s) {
            const IntervalClassification cls = classify_intervals(d, mod32(), s, 2.6, 0.43);
            std::size_t bucket_total = 0;
            for (const auto& [t, bucket] : cls.buckets) {
                (void)t;
                bucket_total += bucket.size();
            }
            CHECK(bucket_total == cls.nonstandard.size());
            CHECK(cls.max_t_minus_s <= 1);
            for (const auto& ci : cls.nonstandard) {
                CHECK(ci.mass > 0);
                // exactness of the classifying norm against the direct piece
                const FiniteSignal direct = reference::apply_localized_direct(
                    ci.interval, mod32(), d.levels.at(ci.cz_level));
                CHECK_THAT(ci.norm2sq,
                           Catch::Matchers::WithinRel(direct.l2() * direct.l2(), 1e-9) ||
                           Catch::Matchers::WithinAbs(direct.l2() * direct.l2(), 1e-12));
                CHECK(ci.norm2sq > ci.threshold);
            }
            for (const auto& ci : cls.standard) CHECK(ci.norm2sq <= ci.threshold);
            // layers: each layer's members are minimal among the remaining ones
            for (const auto& [t, layers] : cls.layers) {
                (void)t;
                std::size_t total = 0;
                for (const auto& layer : layers) total += layer.size();
                CHECK(total == cls.buckets.at(t).size());
                if (layers.size() > 1)
                    for (const auto& small : layers[0])
                        for (const auto& big : layers[1])
                            CHECK_FALSE(small.contains(big));
            }
        }
    }
    SECTION("a tall spike flips the containing interval non-standard") {
        // single very tall spike: the bad part is one point mass, whose
        // localized energy beats the density threshold at large scales
        const FiniteSignal f = FiniteSignal::delta(2000, cplx(1e5, 0));
        const CZDecomposition d = cz_decompose(f, I0, 10.0);
        REQUIRE(d.levels.size() == 1);
        const int L = d.levels.begin()->first;
        const int s = I0.level - 3 - L; // act at the root scale
        const IntervalClassification cls = classify_intervals(d, mod32(), s, 2.6, 0.43);
        REQUIRE_FALSE(cls.nonstandard.empty());
        bool found = false;
        for (const auto& ci : cls.nonstandard)
            if (ci.interval.contains(2000)) found = true;
        CHECK(found);
    }
}

TEST_CASE("Carleson packing of density buckets") {
    const DyadicInterval I0(12, 0);
    SECTION("disjoint members pack trivially") {
        IntervalClassification cls;
        cls.buckets[2] = {DyadicInterval(5, 0), DyadicInterval(5, 2), DyadicInterval(5, 7)};
        const ExperimentReport rep = carleson_check(cls);
        CHECK(rep.flag("carleson_ok"));
        CHECK(rep.rows[0][2] == 1.0);
    }
    SECTION("random decompositions pack within the configured constant") {
        for (int t = 0; t < 20; ++t) {
            const FiniteSignal f = gen::spike_mix(I0, rng::derive(0x51, t));
            const CZDecomposition d = cz_decompose(f, I0, 10.0);
            if (d.levels.empty()) continue;
            for (int s = 0; s <= 4; ++s) {
                const IntervalClassification cls = classify_intervals(d, mod32(), s, 2.6, 0.43);
                CHECK(carleson_check(cls).flag("carleson_ok"));
            }
        }
    }
}

TEST_CASE("chaining bound for running maxima") {
    SECTION("one summand") {
        const FiniteSignal phi = gen::complex_signal(0, 16, 0x61);
        const RMResult rm = rm_maximal({phi});
        CHECK(rm.level_count == 1);
        for (std::int64_t x = phi.begin(); x < phi.end(); ++x)
            CHECK_THAT(rm.bound.at(x).real(), Catch::Matchers::WithinAbs(std::abs(phi.at(x)), 1e-13));
        CHECK_THAT(rm.bessel_hat, Catch::Matchers::WithinRel(phi.l2(), 1e-12));
    }
    SECTION("orthogonal spikes") {
        const std::size_t N = 32;
        std::vector<FiniteSignal> phis;
        for (std::size_t j = 0; j < N; ++j) phis.push_back(FiniteSignal::delta(std::int64_t(j)));
        const RMResult rm = rm_maximal(phis);
        const FiniteSignal truth = reference::running_max_prefix(phis);
        for (std::int64_t x = 0; x < std::int64_t(N); ++x) {
            CHECK(truth.at(x).real() == 1.0);
            CHECK(rm.bound.at(x).real() >= 1.0);
        }
        CHECK(rm.bound_l2 <= double(rm.level_count) * rm.bessel_hat + 1e-9);
    }
    SECTION("empty family rejected") {
        CHECK_THROWS_AS(rm_maximal({}), std::invalid_argument);
    }
    SECTION("random families: domination and the l2 certificate") {
        for (int t = 0; t < 30; ++t) {
            rng::Stream gen(rng::derive(0x62, t));
            const int N = int(gen.uniform_int(1, 64));
            std::vector<FiniteSignal> phis;
            for (int j = 0; j < N; ++j)
                phis.push_back(gen::complex_signal(gen.uniform_int(-16, 16), 40, rng::derive(0x63, t * 100 + j)));
            const RMResult rm = rm_maximal(phis, 256, rng::derive(0x64, t));
            const FiniteSignal truth = reference::running_max_prefix(phis);
            for (std::int64_t x = truth.begin(); x < truth.end(); ++x)
                CHECK(truth.at(x).real() <= rm.bound.at(x).real() + 1e-12);
            CHECK(rm.l2_ok);
        }
    }
}

TEST_CASE("decay in the stopping offset") {
    const DyadicInterval I0(12, 0);
    SECTION("no bad part: all rows zero") {
        const FiniteSignal f = FiniteSignal::indicator(0, 4096, cplx(0.9, 0));
        const ExperimentReport rep = decay_in_s_report(mod32(), f, I0, 1.5, 0, 5);
        for (const auto& row : rep.rows) {
            CHECK(row[1] == 0.0);
            CHECK(row[2] == 0.0);
        }
        CHECK(rep.has("trivial_fit_std"));
    }
    SECTION("single-scale spike input is flagged trivial") {
        const FiniteSignal f = FiniteSignal::delta(64, cplx(4096.0, 0)) +
                               FiniteSignal::indicator(0, 4096, cplx(0.01, 0));
        const ExperimentReport rep = decay_in_s_report(mod32(), f, I0, 1.5, 0, 1);
        CHECK((rep.has("trivial_fit_std") || rep.has("trivial_fit_nonstd")));
    }
    SECTION("multiscale profiles decay on both branches") {
        const ExperimentReport diag = diag_decay_report(mod32(), 6, 11);
        for (int t = 0; t < 3; ++t) {
            const FiniteSignal f = gen::multiscale_spikes(I0, rng::derive(0x71, t));
            const ExperimentReport rep = decay_in_s_report(mod32(), f, I0, 1.5, 0, 7, 10.0,
                                                           diag.get("C0"), diag.get("eps_hat"));
            REQUIRE(rep.has("fitted_rate_std"));
            REQUIRE(rep.has("fitted_rate_nonstd"));
            CHECK(rep.get("fitted_rate_std") < 0.0);
            CHECK(rep.get("fitted_rate_nonstd") < 0.0);
        }
    }
}
