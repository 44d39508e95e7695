#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

// Parametric admissible phases p(s) = sum_i c_i s^{e_i} (log s)^{l_i} with
// exact term-by-term differentiation, the admissibility certificate, and the
// van der Corput exponential-sum bound.

namespace oht {

struct PhaseTerm {
    double coeff;
    double power;
    int log_power; // nonnegative; natural log

    friend bool operator==(const PhaseTerm& a, const PhaseTerm& b) {
        return a.coeff == b.coeff && a.power == b.power && a.log_power == b.log_power;
    }
};

namespace detail {

inline double eval_terms(const std::vector<PhaseTerm>& terms, double s) {
    double out = 0;
    const double ls = std::log(s);
    for (const auto& t : terms) {
        double v = t.coeff * std::pow(s, t.power);
        for (int i = 0; i < t.log_power; ++i) v *= ls;
        out += v;
    }
    return out;
}

// d/ds [c s^e log^l s] = c e s^{e-1} log^l s + c l s^{e-1} log^{l-1} s
inline std::vector<PhaseTerm> differentiate_terms(const std::vector<PhaseTerm>& terms) {
    std::map<std::pair<double, int>, double> acc;
    for (const auto& t : terms) {
        if (t.coeff == 0) continue;
        if (t.power != 0) acc[{t.power - 1, t.log_power}] += t.coeff * t.power;
        if (t.log_power > 0) acc[{t.power - 1, t.log_power - 1}] += t.coeff * double(t.log_power);
    }
    std::vector<PhaseTerm> out;
    for (const auto& kv : acc)
        if (kv.second != 0) out.push_back({kv.second, kv.first.first, kv.first.second});
    return out;
}

} // namespace detail

/// Closed-form representative of a Hardy-field phase in the class with
/// parameters (delta, M, m): m + alpha is the leading growth exponent with
/// alpha in [delta, 1-delta], and derivatives up to order m+2 are available
/// exactly.
class AdmissiblePhase {
public:
    AdmissiblePhase(std::vector<PhaseTerm> terms, double delta, double M, int m)
        : delta_(delta), M_(M), m_(m) {
        if (terms.empty()) throw std::invalid_argument("AdmissiblePhase: no terms");
        if (!(delta > 0 && delta < 0.5)) throw std::invalid_argument("AdmissiblePhase: delta in (0,1/2)");
        if (M < 1) throw std::invalid_argument("AdmissiblePhase: M >= 1");
        if (m < 1) throw std::invalid_argument("AdmissiblePhase: m >= 1");
        for (const auto& t : terms)
            if (t.log_power < 0) throw std::invalid_argument("AdmissiblePhase: negative log power");
        derivs_.push_back(std::move(terms));
        for (int j = 1; j <= m_ + 2; ++j)
            derivs_.push_back(detail::differentiate_terms(derivs_.back()));
    }

    /// Convenience: pure monomial c * t^e with class parameters inferred
    /// from the leading exponent.
    static AdmissiblePhase monomial(double coeff, double power, double delta = 0.1, double M = 4.0) {
        const int m = int(std::floor(power));
        return AdmissiblePhase({{coeff, power, 0}}, delta, M, std::max(1, m));
    }

    double operator()(double s) const { return detail::eval_terms(derivs_[0], s); }

    /// Exact j-th derivative, j = 0 .. m+2.
    double derivative(int order, double s) const {
        if (order < 0 || order > m_ + 2)
            throw std::out_of_range("AdmissiblePhase: derivative order not supported");
        if (s < 1) throw std::invalid_argument("AdmissiblePhase: s >= 1 required");
        return detail::eval_terms(derivs_[std::size_t(order)], s);
    }

    double delta() const noexcept { return delta_; }
    double M() const noexcept { return M_; }
    int m() const noexcept { return m_; }

    /// Largest power among the terms (log factors not counted).
    double leading_power() const {
        double e = derivs_[0].front().power;
        for (const auto& t : derivs_[0]) e = std::max(e, t.power);
        return e;
    }

    const std::vector<PhaseTerm>& terms() const noexcept { return derivs_[0]; }

private:
    std::vector<std::vector<PhaseTerm>> derivs_; // derivs_[j] = terms of p^(j)
    double delta_, M_;
    int m_;
};

/// Result of sampling the derivative sandwich
///   M^{-1} s^{m+alpha-eta-j} <= |p^(j)(s)| <= M s^{m+alpha+eta-j}
/// over a geometric grid.  alpha is the least-squares growth exponent of p
/// minus m; eta is the worst slack observed.  (The sandwich is checked on
/// magnitudes: every representative with non-integer type has p^(m+2) < 0.)
struct AdmissibilityCertificate {
    double alpha = 0;
    double eta = 0;
    double eta_cap = 0;
    bool alpha_in_range = false;
    std::vector<std::pair<int, double>> violations; // (derivative order, s)
    bool admissible = false;
};

inline AdmissibilityCertificate check_admissible(const AdmissiblePhase& p, double s_max,
                                                 double eta_cap = 0.01, double sample_ratio = 1.1) {
    if (s_max < 16) throw std::invalid_argument("check_admissible: s_max >= 16 required");
    if (sample_ratio <= 1) throw std::invalid_argument("check_admissible: sample ratio must exceed 1");

    std::vector<double> sample;
    for (double s = 1.0; s < s_max; s *= sample_ratio) sample.push_back(s);
    sample.push_back(s_max);

    // p itself must be eventually positive on the sample.
    const std::size_t tail_start = sample.size() - std::min<std::size_t>(8, sample.size());
    for (std::size_t i = tail_start; i < sample.size(); ++i)
        if (p(sample[i]) <= 0)
            throw std::domain_error("check_admissible: phase not eventually positive on the sample");

    AdmissibilityCertificate cert;
    cert.eta_cap = eta_cap;

    // Fitted alpha: slope of log p against log s, minus m.
    {
        std::vector<double> xs, ys;
        for (double s : sample) {
            const double v = p(s);
            if (s > 1 && v > 0) {
                xs.push_back(std::log(s));
                ys.push_back(std::log(v));
            }
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
        }
        const double n = double(xs.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        cert.alpha = slope - double(p.m());
    }

    const double logM = std::log(p.M());
    for (int j = 0; j <= p.m() + 2; ++j) {
        const double target = double(p.m()) + cert.alpha - double(j);
        for (double s : sample) {
            const double mag = std::abs(p.derivative(j, s));
            if (mag == 0) {
                cert.violations.emplace_back(j, s);
                continue;
            }
            const double lmag = std::log(mag);
            if (s == 1.0) {
                // log s = 0: the sandwich reduces to 1/M <= |p^(j)(1)| <= M.
                if (lmag < -logM || lmag > logM) cert.violations.emplace_back(j, s);
                continue;
            }
            const double ls = std::log(s);
            const double lower_eta = (target * ls - logM - lmag) / ls;
            const double upper_eta = (lmag - logM - target * ls) / ls;
            const double eta_req = std::max({0.0, lower_eta, upper_eta});
            cert.eta = std::max(cert.eta, eta_req);
            if (eta_req > eta_cap) cert.violations.emplace_back(j, s);
        }
    }

    cert.alpha_in_range = cert.alpha >= p.delta() && cert.alpha <= 1.0 - p.delta();
    cert.admissible = cert.alpha_in_range && cert.violations.empty();
    return cert;
}

/// Inputs of the van der Corput bound: k-th derivative of the phase pinned
/// between lambda and h*lambda on [a, b].
struct VdcParams {
    int k;          // derivative order, >= 2
    double a, b;    // summation range, a <= b <= a + N
    double lambda;  // 0 < lambda <= |f^(k)| on [a,b]
    double h;       // |f^(k)| <= h*lambda, h >= 1
};

/// Implied constant of the exponential-sum bound, fitted once on the
/// quadratic calibration family f(n) = theta n^2 (max prefix-sum ratio
/// 0.9511 over theta in [0.001, 0.3], ranges up to 4096) and frozen for all
/// inequality tests.
inline constexpr double kVdcImpliedConstant = 1.0;

/// h*N*( lambda^{1/(K-2)} + N^{-2/K} + (N^k lambda)^{-2/K} ), K = 2^k.
inline double vdc_bound(const VdcParams& prm, std::int64_t N) {
    if (prm.k < 2) throw std::domain_error("vdc_bound: k >= 2 required");
    if (N < 1) throw std::invalid_argument("vdc_bound: N >= 1 required");
    const double K = std::pow(2.0, prm.k);
    const double Nd = double(N);
    const double t1 = std::pow(prm.lambda, 1.0 / (K - 2.0));
    const double t2 = std::pow(Nd, -2.0 / K);
    const double t3 = std::pow(std::pow(Nd, prm.k) * prm.lambda, -2.0 / K);
    return prm.h * Nd * (t1 + t2 + t3);
}

/// Scan |f^(k)| over the integers (and midpoints) of [a, b] and package the
/// observed range as VdcParams.  Throws if the derivative vanishes there.
template <class DerivFn>
VdcParams vdc_params_from_scan(DerivFn&& kth_derivative, int k, double a, double b) {
    if (b < a) throw std::invalid_argument("vdc_params_from_scan: empty range");
    double lo = 0, hi = 0;
    bool first = true;
    for (double x = std::ceil(a); x <= b; x += 0.5) {
        const double m = std::abs(kth_derivative(x));
        if (first) { lo = hi = m; first = false; }
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    if (first || lo <= 0)
        throw std::domain_error("vdc_params_from_scan: derivative vanishes on the range");
    return VdcParams{k, a, b, lo, hi / lo};
}

} // namespace oht
