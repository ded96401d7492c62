#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "error.hpp"

namespace ladderlab {

/// Closed frequency interval [omega_min, omega_max] with 0 < omega_min < omega_max.
struct omega_window {
    omega_window(double omega_min_, double omega_max_)
        : omega_min(omega_min_), omega_max(omega_max_) {
        if (!(std::isfinite(omega_min) && omega_min > 0.0))
            throw parameter_error("window needs a positive finite lower frequency");
        if (!(std::isfinite(omega_max) && omega_max > omega_min))
            throw parameter_error("window needs omega_max > omega_min");
    }

    double omega_min;
    double omega_max;

    [[nodiscard]] bool contains(double omega) const noexcept {
        return omega >= omega_min && omega <= omega_max;
    }
};

/// `points` log-spaced values from lo to hi inclusive, exact at both ends.
[[nodiscard]] inline std::vector<double> log_spaced(double lo, double hi, std::size_t points) {
    if (points < 2) throw parameter_error("log spacing needs at least two points");
    if (!(std::isfinite(lo) && lo > 0.0 && std::isfinite(hi) && hi > lo))
        throw parameter_error("log spacing needs 0 < lo < hi");
    std::vector<double> out(points);
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t k = 0; k < points; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(points - 1);
        out[k] = std::exp(log_lo + t * (log_hi - log_lo));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

/// Ordinary least squares y = slope*x + intercept with the coefficient of
/// determination clamped to [0, 1]; a constant response fits exactly (r2 = 1).
struct line_fit {
    double slope;
    double intercept;
    double r2;
};

[[nodiscard]] inline line_fit fit_line(const std::vector<double>& x,
                                       const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw parameter_error("line fit needs two equal-length samples or more");
    const double n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        mean_x += x[k];
        mean_y += y[k];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double dx = x[k] - mean_x;
        const double dy = y[k] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw parameter_error("line fit needs at least two distinct abscissae");
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    double r2 = 1.0;
    if (syy > 0.0) {
        r2 = 1.0 - (syy - slope * sxy) / syy;
        if (r2 < 0.0) r2 = 0.0;
        if (r2 > 1.0) r2 = 1.0;
    }
    return {slope, intercept, r2};
}

} // namespace ladderlab
