#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ladderlab/admittance.hpp"
#include "ladderlab/circuit.hpp"
#include "ladderlab/error.hpp"
#include "ladderlab/fractal.hpp"
#include "ladderlab/sweep.hpp"
#include "testutil.hpp"

using namespace ladderlab;
using testutil::rel_err;

TEST_CASE("fractal_ladder_spec validates scales and detects reciprocity") {
    const fractal_ladder_spec spec(1.0, 2.0, 2.0, 0.5);
    CHECK(spec.a1() == 1.0);
    CHECK(spec.b1() == 2.0);
    CHECK(spec.is_oustaloup());
    CHECK_FALSE(fractal_ladder_spec(1.0, 2.0, 2.0, 0.499).is_oustaloup());

    const fractal_ladder_spec built = fractal_ladder_spec::oustaloup(1.0, 2.0, 1.3);
    CHECK(built.rho() == 1.0 / 1.3);
    CHECK(built.is_oustaloup());

    CHECK_THROWS_AS(fractal_ladder_spec(0.0, 1.0, 2.0, 0.5), parameter_error);
    CHECK_THROWS_AS(fractal_ladder_spec(1.0, -1.0, 2.0, 0.5), parameter_error);
    CHECK_THROWS_AS(fractal_ladder_spec(1.0, 1.0, 0.0, 0.5), parameter_error);
    CHECK_THROWS_AS(fractal_ladder_spec(1.0, 1.0, 2.0,
                                        std::numeric_limits<double>::quiet_NaN()),
                    parameter_error);
}

TEST_CASE("fractal_decorations lists geometric stages") {
    const fractal_ladder_spec spec(1.0, 1.0, 2.0, 0.5);
    const std::vector<ladder_stage> stages = fractal_decorations(spec, 3);
    REQUIRE(stages.size() == 3);
    CHECK(stages[0] == ladder_stage{1.0, 1.0});
    CHECK(stages[1] == ladder_stage{2.0, 0.5});
    CHECK(stages[2] == ladder_stage{4.0, 0.25});

    CHECK(fractal_decorations(spec, 1) == std::vector<ladder_stage>{{1.0, 1.0}});

    const fractal_ladder_spec uniform(3.0, 7.0, 1.0, 1.0);
    for (const ladder_stage& stage : fractal_decorations(uniform, 4))
        CHECK(stage == ladder_stage{3.0, 7.0});

    CHECK_THROWS_AS(fractal_decorations(fractal_ladder_spec::oustaloup(1.0, 1.0, 10.0), 400),
                    depth_error);
    CHECK_THROWS_AS(fractal_decorations(spec, 0), parameter_error);
}

TEST_CASE("truncated_admittance matches the explicit ladder") {
    const fractal_ladder_spec unit(1.0, 1.0, 1.0, 1.0);
    CHECK(rel_err(truncated_admittance(unit, 1, 1.0), cdouble(1.0, -1.0)) < 1e-15);

    const fractal_ladder_spec spec(1.0, 1.0, 2.0, 0.5);
    const std::vector<ladder_stage> stages = fractal_decorations(spec, 2);
    const circuit forest = build_ladder_forest(std::span<const ladder_stage>(stages));
    CHECK(rel_err(truncated_admittance(spec, 2, 0.7), eval_admittance(forest, 0.7)) < 1e-14);
}

TEST_CASE("peeling one stage off a truncation shifts the family") {
    // Y_n(a1, b1) = 1/b1 + 1/(j*a1*omega + 1/Y_(n-1)(sigma*a1, rho*b1)).
    const double omega = 0.37;
    for (std::size_t n = 2; n <= 12; ++n) {
        const fractal_ladder_spec spec(0.8, 1.4, 1.3, 0.6);
        const fractal_ladder_spec shifted(spec.sigma() * spec.a1(), spec.rho() * spec.b1(),
                                          spec.sigma(), spec.rho());
        const cdouble whole = truncated_admittance(spec, n, omega);
        const cdouble tail = truncated_admittance(shifted, n - 1, omega);
        const cdouble peeled =
            1.0 / spec.b1() + 1.0 / (cdouble(0.0, spec.a1() * omega) + 1.0 / tail);
        CAPTURE(n);
        CHECK(rel_err(whole, peeled) < 1e-12);
    }
}

TEST_CASE("asymptotic_admittance converges and satisfies the limit relation") {
    const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(1.0, 1.0, 1.2);
    const double omega = 1e-3;
    const asymptotic_result at_omega = asymptotic_admittance(spec, omega);
    CHECK(at_omega.converged);
    CHECK(at_omega.depth_used >= 8);

    // The limit obeys Y(omega) = 1/b1 + 1/(j*a1*omega + 1/(sigma*Y(sigma^2*omega))).
    const asymptotic_result shifted =
        asymptotic_admittance(spec, spec.sigma() * spec.sigma() * omega);
    REQUIRE(shifted.converged);
    const cdouble rhs = 1.0 / spec.b1() +
                        1.0 / (cdouble(0.0, spec.a1() * omega) + 1.0 / (spec.sigma() * shifted.y));
    CHECK(rel_err(at_omega.y, rhs) < 1e-9);
}

TEST_CASE("uniform family limit solves its fixed-point equation") {
    const fractal_ladder_spec uniform(1.0, 1.0, 1.0, 1.0);
    const asymptotic_result result = asymptotic_admittance(uniform, 1.0);
    REQUIRE(result.converged);

    // Uniform stages make the limit a root of Y = 1/b + 1/(j*a*omega + 1/Y),
    // i.e. Y^2 - Y + j = 0 at a = b = omega = 1; take the passive root.
    const cdouble expected = (1.0 + std::sqrt(cdouble(1.0, -4.0))) / 2.0;
    CHECK(rel_err(result.y, expected) < 1e-8);

    for (const double omega : {0.1, 1.0, 10.0}) {
        const asymptotic_result r = asymptotic_admittance(uniform, omega);
        REQUIRE(r.converged);
        const cdouble iterated = 1.0 + 1.0 / (cdouble(0.0, omega) + 1.0 / r.y);
        CHECK(rel_err(r.y, iterated) < 1e-9);
    }
}

TEST_CASE("asymptotic_admittance reports non-convergence without throwing") {
    const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(1.0, 1.0, 1.2);
    const asymptotic_result result = asymptotic_admittance(spec, 1e-3, 1e-16, 8);
    CHECK_FALSE(result.converged);
    CHECK(result.depth_used == 8);
    CHECK(std::isfinite(std::abs(result.y)));

    CHECK_THROWS_AS(asymptotic_admittance(spec, 1e-3, 0.0), parameter_error);
    CHECK_THROWS_AS(asymptotic_admittance(spec, 1e-3, -1.0), parameter_error);
    CHECK_THROWS_AS(asymptotic_admittance(spec, 0.0), zero_frequency_error);
}

TEST_CASE("scaling_residual vanishes for reciprocal scales") {
    CHECK(scaling_residual(fractal_ladder_spec::oustaloup(1.0, 1.0, 2.0), 3, 0.7) < 1e-12);
    CHECK(scaling_residual(fractal_ladder_spec::oustaloup(1.0, 1.0, 2.0), 1, 0.7) < 1e-15);

    std::mt19937 rng(15001);
    std::uniform_real_distribution<double> sigma_dist(1.05, 3.0);
    std::uniform_real_distribution<double> log_omega(-4.0, 2.0);
    std::uniform_real_distribution<double> value(0.2, 5.0);
    for (int trial = 0; trial < 100; ++trial) {
        const fractal_ladder_spec spec =
            fractal_ladder_spec::oustaloup(value(rng), value(rng), sigma_dist(rng));
        const std::size_t n = 1 + rng() % 12;
        const double omega = std::pow(10.0, log_omega(rng));
        CAPTURE(trial, n, omega, spec.sigma());
        CHECK(scaling_residual(spec, n, omega) < 1e-12);
    }

    CHECK_THROWS_AS(scaling_residual(fractal_ladder_spec(1.0, 1.0, 2.0, 0.4), 3, 1.0),
                    parameter_error);
}

TEST_CASE("estimate_exponent recovers pure power laws") {
    const std::vector<double> omegas = log_spaced(1e-2, 1e2, 20);
    std::vector<admittance_sample> inverse;
    std::vector<admittance_sample> constant;
    for (const double omega : omegas) {
        inverse.push_back({omega, cdouble(0.0, -1.0 / omega)});
        constant.push_back({omega, cdouble(2.5, 0.0)});
    }
    const omega_window window(1e-3, 1e3);

    const exponent_fit inv_fit = estimate_exponent(inverse, window);
    CHECK(std::abs(inv_fit.gamma - (-1.0)) < 1e-9);
    CHECK(std::abs(inv_fit.k - 1.0) < 1e-9);
    CHECK(inv_fit.r2 > 1.0 - 1e-12);
    CHECK(inv_fit.points == omegas.size());

    const exponent_fit const_fit = estimate_exponent(constant, window);
    CHECK(std::abs(const_fit.gamma) < 1e-9);
    CHECK(std::abs(const_fit.k - 2.5) < 1e-9);
    // r2 is meaningless here: rounding noise is the entire variance.
}

TEST_CASE("estimate_exponent filters by window and demands eight points") {
    std::vector<admittance_sample> samples;
    for (const double omega : log_spaced(1e-3, 1e3, 12))
        samples.push_back({omega, cdouble(1.0 / omega, 0.0)});

    // Only samples inside the window count.
    const exponent_fit fit = estimate_exponent(samples, omega_window(1e-2, 1e2));
    CHECK(fit.points < samples.size());
    CHECK(fit.points >= 8);

    CHECK_THROWS_AS(estimate_exponent(samples, omega_window(0.5, 2.0)),
                    insufficient_data_error);

    std::vector<admittance_sample> bad = samples;
    bad[3].omega = -1.0;
    CHECK_THROWS_AS(estimate_exponent(bad, omega_window(1e-3, 1e3)), parameter_error);
    bad = samples;
    bad[3].y = cdouble(0.0, 0.0);
    CHECK_THROWS_AS(estimate_exponent(bad, omega_window(1e-3, 1e3)), parameter_error);
}

TEST_CASE("deep reciprocal ladders show the half-power spectrum") {
    const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(1.0, 1.0, 1.1);
    std::vector<admittance_sample> samples;
    for (const double omega : log_spaced(1e-6, 1e-3, 40)) {
        const asymptotic_result result = asymptotic_admittance(spec, omega);
        REQUIRE(result.converged);
        samples.push_back({omega, result.y});
    }
    const exponent_fit fit = estimate_exponent(samples, omega_window(1e-6, 1e-3));
    CHECK(fit.gamma > -0.51);
    CHECK(fit.gamma < -0.49);
    CHECK(fit.r2 > 0.999);
}

TEST_CASE("limit magnitudes vary monotonically at the low end") {
    // Toward low frequency the limit magnitude grows while the first series
    // drop j*a1*omega*sigma*Y(sigma^2*omega) shrinks; both trends are strict
    // on a descending grid through [1e-6, 1e-5].
    for (const double sigma : {1.1, 2.0}) {
        const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(1.0, 1.0, sigma);
        std::vector<double> omegas = log_spaced(1e-6, 1e-5, 11);
        std::reverse(omegas.begin(), omegas.end());
        double previous_mag = 0.0;
        double previous_drop = std::numeric_limits<double>::infinity();
        for (const double omega : omegas) {
            const asymptotic_result result =
                asymptotic_admittance(spec, sigma * sigma * omega);
            REQUIRE(result.converged);
            const double mag = std::abs(result.y);
            const double drop = omega * spec.a1() * sigma * mag;
            CAPTURE(sigma, omega);
            CHECK(mag > previous_mag);
            CHECK(drop < previous_drop);
            previous_mag = mag;
            previous_drop = drop;
        }
    }
}

TEST_CASE("log_spaced hits both endpoints exactly") {
    const std::vector<double> grid = log_spaced(1e-3, 1e3, 25);
    REQUIRE(grid.size() == 25);
    CHECK(grid.front() == 1e-3);
    CHECK(grid.back() == 1e3);
    for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);

    CHECK(log_spaced(2.0, 8.0, 2) == std::vector<double>{2.0, 8.0});
    CHECK_THROWS_AS(log_spaced(1.0, 2.0, 1), parameter_error);
    CHECK_THROWS_AS(log_spaced(0.0, 2.0, 4), parameter_error);
    CHECK_THROWS_AS(log_spaced(2.0, 2.0, 4), parameter_error);
}

TEST_CASE("fit_line recovers exact lines and clamps r2") {
    const std::vector<double> x{0.0, 1.0, 2.0, 3.0};
    std::vector<double> y;
    for (const double v : x) y.push_back(3.0 * v - 2.0);
    const line_fit fit = fit_line(x, y);
    CHECK(std::abs(fit.slope - 3.0) < 1e-14);
    CHECK(std::abs(fit.intercept + 2.0) < 1e-14);
    CHECK(fit.r2 == 1.0);

    const line_fit flat = fit_line(x, {5.0, 5.0, 5.0, 5.0});
    CHECK(flat.slope == 0.0);
    CHECK(flat.r2 == 1.0);

    const line_fit noisy = fit_line(x, {1.0, -1.0, 1.0, -1.0});
    CHECK(noisy.r2 >= 0.0);
    CHECK(noisy.r2 <= 1.0);

    CHECK_THROWS_AS(fit_line({1.0, 1.0}, {2.0, 3.0}), parameter_error);
    CHECK_THROWS_AS(fit_line({1.0}, {2.0}), parameter_error);
    CHECK_THROWS_AS(fit_line({1.0, 2.0}, {1.0, 2.0, 3.0}), parameter_error);
}
