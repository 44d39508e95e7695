#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oht/phase.hpp"
#include "oht/rng.hpp"
#include "oht/signal.hpp"

using namespace oht;

TEST_CASE("exact derivatives of closed-form phases") {
    SECTION("t^2") {
        const AdmissiblePhase p({{1.0, 2.0, 0}}, 0.1, 4.0, 1);
        for (double s : {1.0, 3.0, 17.5})
            CHECK_THAT(p.derivative(2, s), Catch::Matchers::WithinAbs(2.0, 1e-14));
    }
    SECTION("t^{3/2} first derivative at 4") {
        const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
        CHECK_THAT(p.derivative(1, 4.0), Catch::Matchers::WithinAbs(3.0, 1e-14));
    }
    SECTION("5t^pi + t log t matches central differences") {
        const double pi = 3.14159265358979323846;
        const AdmissiblePhase p({{5.0, pi, 0}, {1.0, 1.0, 1}}, 0.1, 8.0, 3);
        for (int j = 1; j <= 3; ++j) {
            for (double s : {2.0, 10.0, 100.0}) {
                const double h = s * 1e-4;
                auto lower = [&](double x) { return p.derivative(j - 1, x); };
                const double fd = (lower(s + h) - lower(s - h)) / (2 * h);
                CHECK_THAT(p.derivative(j, s), Catch::Matchers::WithinRel(fd, 1e-6));
            }
        }
    }
    SECTION("unsupported order") {
        const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5); // m = 1
        CHECK_THROWS_AS(p.derivative(4, 2.0), std::out_of_range);
        CHECK_THROWS_AS(p.derivative(0, 0.5), std::invalid_argument);
    }
}

TEST_CASE("central differences of derivative(j) converge to derivative(j+1) at order h^2") {
    const AdmissiblePhase p({{2.0, 1.7, 0}, {0.5, 1.0, 1}}, 0.1, 8.0, 1);
    for (int j = 0; j <= 2; ++j) {
        const double s = 23.0;
        auto fd = [&](double h) {
            return (p.derivative(j, s + h) - p.derivative(j, s - h)) / (2 * h) - p.derivative(j + 1, s);
        };
        const double e1 = std::abs(fd(1e-2));
        const double e2 = std::abs(fd(5e-3));
        CHECK(e1 / e2 > 3.0); // ~4 for O(h^2)
        CHECK(e1 / e2 < 5.0);
    }
}

TEST_CASE("admissibility certificates") {
    SECTION("t^{3/2}: alpha near 1/2, no violations up to 2^20") {
        const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
        const auto cert = check_admissible(p, double(1 << 20));
        CHECK_THAT(cert.alpha, Catch::Matchers::WithinAbs(0.5, 0.01));
        CHECK(cert.violations.empty());
        CHECK(cert.admissible);
    }
    SECTION("t^2 rejected: alpha lands on an integer endpoint") {
        const AdmissiblePhase p({{1.0, 2.0, 0}}, 0.1, 4.0, 1);
        const auto cert = check_admissible(p, 1 << 16);
        CHECK_THAT(cert.alpha, Catch::Matchers::WithinAbs(1.0, 0.01));
        CHECK_FALSE(cert.alpha_in_range);
        CHECK_FALSE(cert.admissible);
    }
    SECTION("5t^pi + t log t: fitted alpha approaches pi - 3") {
        const double pi = 3.14159265358979323846;
        const AdmissiblePhase p({{5.0, pi, 0}, {1.0, 1.0, 1}}, 0.05, 16.0, 3);
        const double a1 = check_admissible(p, 1 << 14, 1.0).alpha;
        const double a2 = check_admissible(p, 1 << 22, 1.0).alpha;
        const double oracle = pi - 3.0; // leading-term exponent
        CHECK(std::abs(a2 - oracle) < std::abs(a1 - oracle) + 1e-9);
        CHECK_THAT(a2, Catch::Matchers::WithinAbs(oracle, 0.05));
    }
    SECTION("eta decreases as the sample grows, pure monomials") {
        for (double power : {1.5, 2.5}) {
            const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, power);
            const double eta_small = check_admissible(p, 1 << 8, 1.0).eta;
            const double eta_large = check_admissible(p, 1 << 20, 1.0).eta;
            CHECK(eta_large <= eta_small + 1e-12);
        }
    }
    SECTION("non-eventually-positive phase is a sign error") {
        const AdmissiblePhase p({{-1.0, 1.5, 0}}, 0.1, 4.0, 1);
        CHECK_THROWS_AS(check_admissible(p, 1 << 10), std::domain_error);
    }
    SECTION("s_max below 16 rejected") {
        const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
        CHECK_THROWS_AS(check_admissible(p, 8.0), std::invalid_argument);
    }
}

TEST_CASE("exponential-sum bound arithmetic") {
    SECTION("plug-in value at k=2") {
        CHECK_THAT(vdc_bound({2, 0, 1, 1.0, 1.0}, 1), Catch::Matchers::WithinAbs(3.0, 1e-14));
    }
    SECTION("k below 2 rejected") {
        CHECK_THROWS_AS(vdc_bound({1, 0, 1, 1.0, 1.0}, 8), std::domain_error);
    }
    SECTION("monotone in h and N") {
        rng::Stream gen(11);
        for (int t = 0; t < 50; ++t) {
            const int k = int(gen.uniform_int(2, 4));
            const double lambda = gen.uniform(1e-4, 0.5);
            const double h = gen.uniform(1.0, 8.0);
            const std::int64_t N = gen.uniform_int(1, 4096);
            const VdcParams base{k, 0, double(N), lambda, h};
            VdcParams taller = base;
            taller.h = h + gen.uniform(0.1, 4.0);
            CHECK(vdc_bound(taller, N) >= vdc_bound(base, N));
            CHECK(vdc_bound(base, N + gen.uniform_int(1, 512)) >= vdc_bound(base, N));
        }
    }
}

namespace {

// |sum_{a0 < n <= a0+len} e(f(n))| maximized over prefixes, direct summation
template <class F>
double exp_sum_max(F&& f, std::int64_t a0, std::int64_t len) {
    cplx s{};
    double best = 0;
    for (std::int64_t n = a0 + 1; n <= a0 + len; ++n) {
        s += unit_exp(f(double(n)));
        best = std::max(best, std::abs(s));
    }
    return best;
}

} // namespace

TEST_CASE("exponential-sum inequality against the frozen constant") {
    SECTION("quadratic calibration family") {
        for (double theta : {0.001, 0.004, 0.016, 0.064, 0.25}) {
            for (std::int64_t len : {128LL, 1024LL, 4096LL}) {
                const double sum = exp_sum_max([theta](double n) { return theta * n * n; }, 0, len);
                const double bound = kVdcImpliedConstant * vdc_bound({2, 0, double(len), 2 * theta, 1.0}, len);
                CHECK(sum <= bound);
            }
        }
    }
    SECTION("difference phases of t^{3/2}") {
        const AdmissiblePhase p = AdmissiblePhase::monomial(1.0, 1.5);
        for (std::int64_t x : {1LL, 10LL, 200LL}) {
            for (std::int64_t a0 : {256LL, 4096LL}) {
                const std::int64_t len = 4096;
                auto d2 = [&](double t) { return p.derivative(2, t + double(x)) - p.derivative(2, t); };
                const VdcParams prm = vdc_params_from_scan(d2, 2, double(a0), double(a0 + len));
                const double sum = exp_sum_max(
                    [&](double n) { return p(n + double(x)) - p(n); }, a0, len);
                CHECK(sum <= kVdcImpliedConstant * vdc_bound(prm, len));
            }
        }
    }
}
