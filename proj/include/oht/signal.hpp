#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

// Finitely supported complex-valued functions on the integers, with exact
// discrete convolution and the reflection-conjugation involution.

namespace oht {

using cplx = std::complex<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// e(t) = exp(2*pi*i*t), with the argument reduced mod 1 first so that large
/// phases keep full precision.
inline cplx unit_exp(double t) {
    const double r = t - std::floor(t);
    return {std::cos(two_pi * r), std::sin(two_pi * r)};
}

namespace detail {

/// In-place iterative radix-2 FFT; `sign` is the exponent sign (-1 forward).
/// No normalization is applied.
inline void fft_pow2(std::vector<cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    if ((n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * two_pi / double(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

inline std::size_t next_pow2(std::size_t n) {
    return std::bit_ceil(n);
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

} // namespace detail

/// A finitely supported function Z -> C, stored densely on its support
/// window.  The window is trimmed so that the first and last stored values
/// are nonzero; the zero signal has an empty value array.  Equality of
/// signals is therefore equality of (start, values).
class FiniteSignal {
public:
    FiniteSignal() = default;

    FiniteSignal(std::int64_t start, std::vector<cplx> values)
        : start_(start), values_(std::move(values)) {
        trim();
    }

    static FiniteSignal delta(std::int64_t at, cplx amplitude = cplx(1.0, 0.0)) {
        return FiniteSignal(at, {amplitude});
    }

    /// Indicator of the integer interval [begin, end).
    static FiniteSignal indicator(std::int64_t begin, std::int64_t end, cplx value = cplx(1.0, 0.0)) {
        if (end <= begin) return {};
        return FiniteSignal(begin, std::vector<cplx>(std::size_t(end - begin), value));
    }

    bool is_zero() const noexcept { return values_.empty(); }
    std::int64_t begin() const noexcept { return start_; }
    std::int64_t end() const noexcept { return start_ + std::int64_t(values_.size()); }
    std::size_t support_size() const noexcept { return values_.size(); }
    const std::vector<cplx>& values() const noexcept { return values_; }

    cplx at(std::int64_t x) const noexcept {
        if (x < start_ || x >= end()) return {};
        return values_[std::size_t(x - start_)];
    }
    cplx operator[](std::int64_t x) const noexcept { return at(x); }

    friend bool operator==(const FiniteSignal& a, const FiniteSignal& b) {
        return a.is_zero() == b.is_zero() &&
               (a.is_zero() || (a.start_ == b.start_ && a.values_ == b.values_));
    }

    FiniteSignal& operator*=(cplx c) {
        if (c == cplx{}) { *this = {}; return *this; }
        for (auto& v : values_) v *= c;
        return *this;
    }

    friend FiniteSignal operator*(cplx c, FiniteSignal f) { f *= c; return f; }
    friend FiniteSignal operator*(FiniteSignal f, cplx c) { f *= c; return f; }

    friend FiniteSignal operator+(const FiniteSignal& a, const FiniteSignal& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const std::int64_t lo = std::min(a.begin(), b.begin());
        const std::int64_t hi = std::max(a.end(), b.end());
        std::vector<cplx> out(std::size_t(hi - lo));
        for (std::int64_t x = a.begin(); x < a.end(); ++x) out[std::size_t(x - lo)] += a.at(x);
        for (std::int64_t x = b.begin(); x < b.end(); ++x) out[std::size_t(x - lo)] += b.at(x);
        return FiniteSignal(lo, std::move(out));
    }

    friend FiniteSignal operator-(const FiniteSignal& a, const FiniteSignal& b) {
        return a + (b * cplx(-1.0, 0.0));
    }

    FiniteSignal& operator+=(const FiniteSignal& o) { *this = *this + o; return *this; }
    FiniteSignal& operator-=(const FiniteSignal& o) { *this = *this - o; return *this; }

    double l1() const {
        double s = 0;
        for (const auto& v : values_) s += std::abs(v);
        return s;
    }

    double l2() const {
        double s = 0;
        for (const auto& v : values_) s += std::norm(v);
        return std::sqrt(s);
    }

    double linf() const {
        double s = 0;
        for (const auto& v : values_) s = std::max(s, std::abs(v));
        return s;
    }

    double lp(double p) const {
        if (p < 1) throw std::domain_error("lp: p must be >= 1");
        double s = 0;
        for (const auto& v : values_) s += std::pow(std::abs(v), p);
        return std::pow(s, 1.0 / p);
    }

    /// Largest |value| attained away from x = 0.
    double sup_off_zero() const {
        double s = 0;
        for (std::int64_t x = begin(); x < end(); ++x)
            if (x != 0) s = std::max(s, std::abs(at(x)));
        return s;
    }

private:
    std::int64_t start_ = 0;
    std::vector<cplx> values_;

    void trim() {
        std::size_t lo = 0, hi = values_.size();
        while (lo < hi && values_[lo] == cplx{}) ++lo;
        while (hi > lo && values_[hi - 1] == cplx{}) --hi;
        if (lo == hi) {
            start_ = 0;
            values_.clear();
            return;
        }
        if (lo > 0 || hi < values_.size()) {
            std::vector<cplx> v(values_.begin() + std::ptrdiff_t(lo), values_.begin() + std::ptrdiff_t(hi));
            values_ = std::move(v);
            start_ += std::int64_t(lo);
        }
    }
};

inline std::ostream& operator<<(std::ostream& os, const FiniteSignal& f) {
    if (f.is_zero()) return os << "signal{zero}";
    os << "signal[" << f.begin() << "," << f.end() << "){";
    const std::int64_t shown = std::min<std::int64_t>(4, std::int64_t(f.support_size()));
    for (std::int64_t i = 0; i < shown; ++i) {
        if (i) os << ", ";
        os << f.at(f.begin() + i);
    }
    if (std::int64_t(f.support_size()) > shown) os << ", ...";
    return os << "}";
}

/// f restricted to [begin, end).
inline FiniteSignal restrict_to(const FiniteSignal& f, std::int64_t begin, std::int64_t end) {
    const std::int64_t lo = std::max(begin, f.begin());
    const std::int64_t hi = std::min(end, f.end());
    if (hi <= lo) return {};
    std::vector<cplx> v;
    v.reserve(std::size_t(hi - lo));
    for (std::int64_t x = lo; x < hi; ++x) v.push_back(f.at(x));
    return FiniteSignal(lo, std::move(v));
}

/// g~(x) = conj(g(-x)), the reflection-conjugation involution.
inline FiniteSignal reflect_conj(const FiniteSignal& g) {
    if (g.is_zero()) return {};
    std::vector<cplx> v(g.support_size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = std::conj(g.values()[g.support_size() - 1 - i]);
    return FiniteSignal(-(g.end() - 1), std::move(v));
}

namespace detail {

inline FiniteSignal convolve_small(const FiniteSignal& f, const FiniteSignal& g) {
    std::vector<cplx> out(f.support_size() + g.support_size() - 1);
    for (std::size_t i = 0; i < f.support_size(); ++i) {
        const cplx fv = f.values()[i];
        if (fv == cplx{}) continue;
        for (std::size_t j = 0; j < g.support_size(); ++j)
            out[i + j] += fv * g.values()[j];
    }
    return FiniteSignal(f.begin() + g.begin(), std::move(out));
}

inline FiniteSignal convolve_fft(const FiniteSignal& f, const FiniteSignal& g) {
    const std::size_t out_n = f.support_size() + g.support_size() - 1;
    const std::size_t n = next_pow2(out_n);
    std::vector<cplx> a(n), b(n);
    std::copy(f.values().begin(), f.values().end(), a.begin());
    std::copy(g.values().begin(), g.values().end(), b.begin());
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < n; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    const double inv = 1.0 / double(n);
    std::vector<cplx> out(out_n);
    for (std::size_t i = 0; i < out_n; ++i) out[i] = a[i] * inv;
    return FiniteSignal(f.begin() + g.begin(), std::move(out));
}

} // namespace detail

/// Exact discrete convolution.  Evaluation switches from the direct double
/// loop to a transform once both supports exceed `direct_threshold`; the two
/// paths agree to well below 1e-10 relative error at the sizes used here.
inline FiniteSignal convolve(const FiniteSignal& f, const FiniteSignal& g,
                             std::size_t direct_threshold = 256) {
    if (f.is_zero() || g.is_zero()) return {};
    if (std::min(f.support_size(), g.support_size()) <= direct_threshold)
        return detail::convolve_small(f, g);
    return detail::convolve_fft(f, g);
}

inline double max_abs_diff(const FiniteSignal& a, const FiniteSignal& b) {
    if (a.is_zero() && b.is_zero()) return 0.0;
    const std::int64_t lo = std::min(a.is_zero() ? b.begin() : a.begin(),
                                     b.is_zero() ? a.begin() : b.begin());
    const std::int64_t hi = std::max(a.is_zero() ? b.end() : a.end(),
                                     b.is_zero() ? a.end() : b.end());
    double m = 0;
    for (std::int64_t x = lo; x < hi; ++x) m = std::max(m, std::abs(a.at(x) - b.at(x)));
    return m;
}

/// Fixture format: one "x value_re value_im" line per support point.
inline void write_signal(std::ostream& os, const FiniteSignal& f) {
    os.precision(17);
    for (std::int64_t x = f.begin(); x < f.end(); ++x)
        os << x << ' ' << f.at(x).real() << ' ' << f.at(x).imag() << '\n';
}

inline FiniteSignal read_signal(std::istream& is) {
    std::int64_t x = 0;
    double re = 0, im = 0;
    FiniteSignal out;
    while (is >> x >> re >> im) out += FiniteSignal::delta(x, cplx(re, im));
    return out;
}

} // namespace oht
