#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "admittance.hpp"
#include "error.hpp"
#include "sweep.hpp"
#include "types.hpp"

namespace ladderlab {

/// Geometrically scaled ladder family: stage i (1-based) has inertance
/// sigma^(i-1)*a1 and resistance rho^(i-1)*b1. Reciprocal scales
/// (rho*sigma = 1) make the family self-similar under omega -> sigma^2*omega.
class fractal_ladder_spec {
public:
    fractal_ladder_spec(double a1, double b1, double sigma, double rho)
        : a1_(a1), b1_(b1), sigma_(sigma), rho_(rho) {
        if (!(std::isfinite(a1) && a1 > 0.0) || !(std::isfinite(b1) && b1 > 0.0))
            throw parameter_error("ladder family needs positive a1 and b1");
        if (!(std::isfinite(sigma) && sigma > 0.0) || !(std::isfinite(rho) && rho > 0.0))
            throw parameter_error("ladder family needs positive sigma and rho");
    }

    /// Family with reciprocal scales rho = 1/sigma (an Oustaloup-style
    /// recursive ladder, the classic constant-phase-element approximation).
    [[nodiscard]] static fractal_ladder_spec oustaloup(double a1, double b1, double sigma) {
        return fractal_ladder_spec(a1, b1, sigma, 1.0 / sigma);
    }

    [[nodiscard]] double a1() const noexcept { return a1_; }
    [[nodiscard]] double b1() const noexcept { return b1_; }
    [[nodiscard]] double sigma() const noexcept { return sigma_; }
    [[nodiscard]] double rho() const noexcept { return rho_; }

    /// True when the scales are reciprocal to within 1e-12.
    [[nodiscard]] bool is_oustaloup() const noexcept {
        return std::abs(rho_ * sigma_ - 1.0) <= 1e-12;
    }

    [[nodiscard]] bool operator==(const fractal_ladder_spec&) const noexcept = default;

private:
    double a1_;
    double b1_;
    double sigma_;
    double rho_;
};

/// First n stages of the family; throws when the geometric growth or decay
/// leaves the positive floating-point range.
[[nodiscard]] inline std::vector<ladder_stage> fractal_decorations(const fractal_ladder_spec& spec,
                                                                   std::size_t n) {
    if (n < 1) throw parameter_error("decorations need a depth of at least one");
    std::vector<ladder_stage> stages(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double power = static_cast<double>(k);
        const ladder_stage stage{spec.a1() * std::pow(spec.sigma(), power),
                                 spec.b1() * std::pow(spec.rho(), power)};
        if (!(std::isfinite(stage.inertance) && stage.inertance > 0.0) ||
            !(std::isfinite(stage.resistance) && stage.resistance > 0.0))
            throw depth_error("geometric decoration left the floating-point range");
        stages[k] = stage;
    }
    return stages;
}

/// Admittance of the depth-n truncation of the family.
[[nodiscard]] inline cdouble truncated_admittance(const fractal_ladder_spec& spec, std::size_t n,
                                                  double omega) {
    const std::vector<ladder_stage> stages = fractal_decorations(spec, n);
    return ladder_admittance_cf(stages, omega);
}

/// Outcome of the depth-doubling limit search. converged = false is a
/// first-class result, not an error.
struct asymptotic_result {
    cdouble y;
    std::size_t depth_used;
    bool converged;
};

/// Deep-ladder limit by doubling the truncation depth (from 8) until the
/// relative change |Y_2n - Y_n|/|Y_n| drops below rel_tol or the next depth
/// would exceed n_max.
[[nodiscard]] inline asymptotic_result asymptotic_admittance(const fractal_ladder_spec& spec,
                                                             double omega,
                                                             double rel_tol = 1e-10,
                                                             std::size_t n_max = 65536) {
    if (omega == 0.0) throw zero_frequency_error("asymptotic admittance needs a nonzero frequency");
    if (!(std::isfinite(rel_tol) && rel_tol > 0.0))
        throw parameter_error("asymptotic admittance needs rel_tol > 0");
    if (n_max < 1) throw parameter_error("asymptotic admittance needs n_max >= 1");
    std::size_t depth = n_max < 8 ? n_max : 8;
    cdouble y = truncated_admittance(spec, depth, omega);
    while (true) {
        const std::size_t next = depth * 2;
        if (next > n_max) return {y, depth, false};
        const cdouble y_next = truncated_admittance(spec, next, omega);
        const double change = std::abs(y_next - y) / std::abs(y);
        y = y_next;
        depth = next;
        if (change < rel_tol) return {y, depth, true};
    }
}

/// Relative residual of the finite-depth scaling identity
///   Y_n(sigma*a1, b1/sigma)(omega) = sigma * Y_n(a1, b1)(sigma^2 * omega),
/// which holds exactly for reciprocal scales; the result is pure rounding.
[[nodiscard]] inline double scaling_residual(const fractal_ladder_spec& spec, std::size_t n,
                                             double omega) {
    if (!spec.is_oustaloup())
        throw parameter_error("scaling residual needs reciprocal scales");
    const fractal_ladder_spec scaled(spec.sigma() * spec.a1(), spec.b1() / spec.sigma(),
                                     spec.sigma(), spec.rho());
    const cdouble lhs = truncated_admittance(scaled, n, omega);
    const cdouble rhs =
        spec.sigma() * truncated_admittance(spec, n, spec.sigma() * spec.sigma() * omega);
    return std::abs(lhs - rhs) / std::abs(rhs);
}

/// Power-law fit |y| = k * omega^gamma over a frequency window.
struct exponent_fit {
    double gamma;
    double k;
    double r2;
    omega_window window;
    std::size_t points;
};

/// Unweighted least squares of log|y| against log(omega) over the samples
/// that fall inside the window (at least eight of them).
[[nodiscard]] inline exponent_fit estimate_exponent(std::span<const admittance_sample> samples,
                                                    const omega_window& window) {
    std::vector<double> log_omega;
    std::vector<double> log_mag;
    for (const admittance_sample& sample : samples) {
        if (!(std::isfinite(sample.omega) && sample.omega > 0.0))
            throw parameter_error("samples need omega > 0");
        if (!window.contains(sample.omega)) continue;
        const double magnitude = std::abs(sample.y);
        if (!(std::isfinite(magnitude) && magnitude > 0.0))
            throw parameter_error("samples need finite nonzero admittances");
        log_omega.push_back(std::log(sample.omega));
        log_mag.push_back(std::log(magnitude));
    }
    if (log_omega.size() < 8)
        throw insufficient_data_error("exponent fit needs at least eight in-window samples");
    const line_fit fit = fit_line(log_omega, log_mag);
    return {fit.slope, std::exp(fit.intercept), fit.r2, window, log_omega.size()};
}

} // namespace ladderlab
