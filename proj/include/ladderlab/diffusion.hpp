#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "admittance.hpp"
#include "error.hpp"
#include "fractal.hpp"
#include "types.hpp"

namespace ladderlab {

/// Geometric space scale z_k = z1*(1+delta)^(k-1), k = 1..n: the unique kind
/// of grid on which constant-coefficient R/L line profiles become a
/// geometrically scaled ladder. Strictly increasing by construction.
class geometric_grid {
public:
    geometric_grid(double z1, double delta, std::size_t n) : z1_(z1), delta_(delta) {
        if (!(std::isfinite(z1) && z1 > 0.0)) throw parameter_error("grid needs z1 > 0");
        if (!(std::isfinite(delta) && delta > 0.0)) throw parameter_error("grid needs delta > 0");
        if (n < 3) throw parameter_error("grid needs at least three points");
        points_.resize(n);
        for (std::size_t k = 0; k < n; ++k)
            points_[k] = z1 * std::pow(1.0 + delta, static_cast<double>(k));
        if (!std::isfinite(points_.back()))
            throw parameter_error("grid extent exceeds the floating-point range");
    }

    [[nodiscard]] double z1() const noexcept { return z1_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] const std::vector<double>& points() const noexcept { return points_; }

    [[nodiscard]] bool operator==(const geometric_grid&) const = default;

private:
    double z1_;
    double delta_;
    std::vector<double> points_;
};

/// Per-point line profiles R_k = r0/(delta*z_k), L_k = l0*delta*z_k. These are
/// the unique power-law profiles for which each cell of the geometric grid
/// carries the same per-length constants r0 and l0.
[[nodiscard]] inline std::vector<ladder_stage> rl_profiles(const geometric_grid& grid, double r0,
                                                           double l0) {
    if (!(std::isfinite(r0) && r0 > 0.0) || !(std::isfinite(l0) && l0 > 0.0))
        throw parameter_error("line profiles need positive r0 and l0");
    std::vector<ladder_stage> stages(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double z = grid.points()[k];
        stages[k] = ladder_stage{l0 * grid.delta() * z, r0 / (grid.delta() * z)};
    }
    return stages;
}

/// A grid-induced ladder: the geometric family it belongs to plus the
/// explicit per-stage values. The family always has reciprocal scales
/// sigma = 1+delta, rho = 1/(1+delta).
struct grid_ladder {
    fractal_ladder_spec spec;
    std::vector<ladder_stage> stages;
};

[[nodiscard]] inline grid_ladder ladder_from_grid(const geometric_grid& grid, double r0,
                                                  double l0) {
    std::vector<ladder_stage> stages = rl_profiles(grid, r0, l0);
    const double sigma = 1.0 + grid.delta();
    fractal_ladder_spec spec(l0 * grid.delta() * grid.z1(), r0 / (grid.delta() * grid.z1()),
                             sigma, 1.0 / sigma);
    return grid_ladder{spec, std::move(stages)};
}

/// Far-end convention: short ties the last inertance to the return rail
/// (exactly the closed ladder), open leaves the last series branch dangling.
enum class line_termination { short_circuit, open_circuit };

/// One frequency-domain transmission-line problem on a geometric grid.
struct diffusion_problem {
    geometric_grid grid;
    double r0;
    double l0;
    double omega;
    line_termination termination = line_termination::short_circuit;
};

/// Node voltages and series branch currents, normalized to u[0] = 1.
/// i[k] flows from node k toward node k+1 (the last entry returns to the rail
/// under short termination and is zero under open termination).
struct ladder_line_solution {
    std::vector<cdouble> u;
    std::vector<cdouble> i;
    cdouble y_in;
};

/// Line solution plus the largest backward-error residual of the three-point
/// current identity over the interior nodes.
struct line_solution {
    std::vector<cdouble> u;
    std::vector<cdouble> i;
    cdouble y_in;
    double max_interior_residual;
};

namespace detail {

[[nodiscard]] inline cdouble ldexp2(cdouble z, int e) noexcept {
    return cdouble(std::ldexp(z.real(), e), std::ldexp(z.imag(), e));
}

// Frontier rescale unit. Rescaling by an exact power of two whenever the
// back-substitution frontier grows past 2^600 keeps every stored value inside
// the double range without changing a single mantissa bit, so the normalized
// solution is identical to what unbounded-range arithmetic would give.
inline constexpr int scale_shift = 600;
inline constexpr double scale_threshold = 0x1p600;

struct raw_line_state {
    std::vector<cdouble> u;          // frontier-rescaled node voltages
    std::vector<cdouble> i;          // frontier-rescaled branch currents
    std::vector<int> scale_count;    // rescale count in effect at each node
    cdouble input_current;           // drive current, at scale_count.front()
};

/// Back-substitution from the far end: assume u = 1 there, then walk toward
/// the input accumulating shunt currents and series voltage drops.
[[nodiscard]] inline raw_line_state solve_raw(std::span<const ladder_stage> stages, double omega,
                                              line_termination termination) {
    if (stages.empty()) throw arity_error("line solve needs at least one stage");
    if (omega == 0.0) throw zero_frequency_error("line solve needs a nonzero frequency");
    for (const ladder_stage& stage : stages) {
        if (!(std::isfinite(stage.inertance) && stage.inertance > 0.0) ||
            !(std::isfinite(stage.resistance) && stage.resistance > 0.0))
            throw domain_error("non-positive component value");
    }
    const std::size_t n = stages.size();
    raw_line_state state;
    state.u.resize(n);
    state.i.resize(n);
    state.scale_count.resize(n);
    cdouble u(1.0, 0.0);
    cdouble i = termination == line_termination::short_circuit
                    ? u / cdouble(0.0, stages[n - 1].inertance * omega)
                    : cdouble(0.0, 0.0);
    int count = 0;
    state.u[n - 1] = u;
    state.i[n - 1] = i;
    state.scale_count[n - 1] = count;
    for (std::size_t k = n - 1; k-- > 0;) {
        i += u / stages[k + 1].resistance;
        u += cdouble(0.0, stages[k].inertance * omega) * i;
        if (!is_finite(u) || !is_finite(i)) throw overflow_error("non-finite line solution");
        while (std::max(std::max(std::abs(u.real()), std::abs(u.imag())),
                        std::max(std::abs(i.real()), std::abs(i.imag()))) > scale_threshold) {
            u = ldexp2(u, -scale_shift);
            i = ldexp2(i, -scale_shift);
            ++count;
        }
        state.u[k] = u;
        state.i[k] = i;
        state.scale_count[k] = count;
    }
    state.input_current = state.i[0] + state.u[0] / stages[0].resistance;
    return state;
}

[[nodiscard]] inline ladder_line_solution normalize_line(const raw_line_state& state) {
    const int top = state.scale_count.front();
    const cdouble u0 = state.u.front();
    ladder_line_solution out;
    out.u.resize(state.u.size());
    out.i.resize(state.i.size());
    for (std::size_t k = 0; k < state.u.size(); ++k) {
        const int shift = -scale_shift * (top - state.scale_count[k]);
        out.u[k] = ldexp2(state.u[k], shift) / u0;
        out.i[k] = ldexp2(state.i[k], shift) / u0;
    }
    out.y_in = state.input_current / u0;
    if (!is_finite(out.y_in)) throw overflow_error("non-finite input admittance");
    return out;
}

/// Backward-error residual of the three-point identity
///   (r0*(I[k+1]-I[k])/dz_plus - r0*(I[k]-I[k-1])/dz_minus)/dz_minus
///     = j*l0*omega*I[k]
/// at one interior node: the defect relative to the magnitudes of the
/// operands entering the differences, so benign cancellation in a correct
/// solution does not register while a genuinely violated identity does.
[[nodiscard]] inline double window_residual(cdouble i_prev, cdouble i_here, cdouble i_next,
                                            double dz_minus, double dz_plus, double r0,
                                            double l0_omega) noexcept {
    const cdouble forward = r0 * (i_next - i_here) / dz_plus;
    const cdouble backward = r0 * (i_here - i_prev) / dz_minus;
    const cdouble lhs = (forward - backward) / dz_minus;
    const cdouble rhs = cdouble(0.0, l0_omega) * i_here;
    const double scale = (r0 * (std::abs(i_next) + std::abs(i_here)) / dz_plus +
                          r0 * (std::abs(i_here) + std::abs(i_prev)) / dz_minus) /
                             dz_minus +
                         std::abs(rhs);
    if (scale == 0.0) return 0.0;
    return std::abs(lhs - rhs) / scale;
}

} // namespace detail

/// Solves the ladder relations for an arbitrary stage sequence and normalizes
/// to a unit input voltage. A single short-terminated stage reduces to
/// y_in = 1/R + 1/(j*L*omega).
[[nodiscard]] inline ladder_line_solution solve_ladder_line(std::span<const ladder_stage> stages,
                                                            double omega,
                                                            line_termination termination) {
    return detail::normalize_line(detail::solve_raw(stages, omega, termination));
}

/// Backward-error residuals of the discrete line equation at the interior
/// grid points, from the node currents I[k] (the series current entering node
/// k; I[0] is the drive current).
[[nodiscard]] inline std::vector<double> discrete_equation_residuals(
    const geometric_grid& grid, double r0, double l0, double omega,
    std::span<const cdouble> node_currents) {
    if (node_currents.size() != grid.size())
        throw parameter_error("need exactly one node current per grid point");
    if (!(std::isfinite(r0) && r0 > 0.0) || !(std::isfinite(l0) && l0 > 0.0))
        throw parameter_error("line profiles need positive r0 and l0");
    const std::vector<double>& z = grid.points();
    std::vector<double> out;
    out.reserve(grid.size() - 2);
    for (std::size_t k = 1; k + 1 < grid.size(); ++k)
        out.push_back(detail::window_residual(node_currents[k - 1], node_currents[k],
                                              node_currents[k + 1], z[k] - z[k - 1],
                                              z[k + 1] - z[k], r0, l0 * omega));
    return out;
}

/// Frequency-domain solve of the discrete line on a geometric grid. The
/// returned y_in equals the continued-fraction admittance of the grid's
/// ladder under short termination; the interior residuals certify that the
/// solution satisfies the discrete diffusion-type current equation.
[[nodiscard]] inline line_solution solve_discrete_line(const diffusion_problem& problem) {
    const std::vector<ladder_stage> stages = rl_profiles(problem.grid, problem.r0, problem.l0);
    const detail::raw_line_state state = detail::solve_raw(stages, problem.omega,
                                                           problem.termination);
    // Node current I[k] is the branch current i[k-1]; I[0] is the drive
    // current. Each three-node window is brought to the rescale count of its
    // input-most member by exact power-of-two shifts; the residual itself is
    // scale-invariant, so no global normalization enters the comparison.
    const std::vector<double>& z = problem.grid.points();
    const std::size_t n = stages.size();
    double max_residual = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        cdouble i_prev;
        int count_prev;
        if (k == 1) {
            i_prev = state.input_current;
            count_prev = state.scale_count[0];
        } else {
            i_prev = state.i[k - 2];
            count_prev = state.scale_count[k - 2];
        }
        const cdouble i_here =
            detail::ldexp2(state.i[k - 1],
                           -detail::scale_shift * (count_prev - state.scale_count[k - 1]));
        const cdouble i_next = detail::ldexp2(
            state.i[k], -detail::scale_shift * (count_prev - state.scale_count[k]));
        const double residual = detail::window_residual(i_prev, i_here, i_next, z[k] - z[k - 1],
                                                        z[k + 1] - z[k], problem.r0,
                                                        problem.l0 * problem.omega);
        max_residual = std::max(max_residual, residual);
    }
    ladder_line_solution normalized = detail::normalize_line(state);
    return line_solution{std::move(normalized.u), std::move(normalized.i), normalized.y_in,
                         max_residual};
}

/// Input admittance of the semi-infinite continuum line with per-length
/// constants r0 and l0: 1/sqrt(j*omega*l0*r0), magnitude (omega*l0*r0)^(-1/2)
/// and phase exactly -45 degrees.
[[nodiscard]] inline cdouble continuum_admittance(double r0, double l0, double omega) {
    if (!(std::isfinite(r0) && r0 > 0.0) || !(std::isfinite(l0) && l0 > 0.0))
        throw parameter_error("continuum admittance needs positive r0 and l0");
    if (!(std::isfinite(omega) && omega > 0.0))
        throw parameter_error("continuum admittance needs omega > 0");
    return 1.0 / std::sqrt(cdouble(0.0, omega * l0 * r0));
}

/// True when the grid extends to at least three diffusive decay lengths at
/// omega, so far-end truncation cannot pollute low-frequency results.
[[nodiscard]] inline bool grid_adequate(const geometric_grid& grid, double r0, double l0,
                                        double omega) {
    return grid.points().back() >= 3.0 * std::sqrt(r0 / (omega * l0));
}

} // namespace ladderlab
