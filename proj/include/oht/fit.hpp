#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oht {

struct LineFit {
    double slope = 0;
    double intercept = 0;
    double residual_max = 0;
    double residual_rms = 0;
    std::size_t points = 0;

    double at(double x) const { return slope * x + intercept; }
};

/// Ordinary least-squares line through (x_i, y_i).
inline LineFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_line: size mismatch");
    const std::size_t n = xs.size();
    if (n < 2) throw std::invalid_argument("fit_line: need at least two points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) throw std::invalid_argument("fit_line: degenerate abscissae");
    LineFit out;
    out.slope = sxy / sxx;
    out.intercept = my - out.slope * mx;
    out.points = n;
    double rr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::abs(ys[i] - out.at(xs[i]));
        out.residual_max = std::max(out.residual_max, r);
        rr += r * r;
    }
    out.residual_rms = std::sqrt(rr / double(n));
    return out;
}

} // namespace oht
