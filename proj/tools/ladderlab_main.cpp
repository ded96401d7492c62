// ladderlab command-line front end: circuit parsing and printing, admittance
// sweeps, exponent fits, scaling checks, and the ladder-vs-line comparison.
// All results are deterministic CSV; numbers print in shortest round-trip
// form. Exit codes: 0 success, 1 numeric or insufficient data, 2 parse/usage.

#include <cmath>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ladderlab/ladderlab.hpp"

namespace {

using namespace ladderlab;

struct sweep_options {
    double omega_min = 1e-3;
    double omega_max = 1e3;
    std::size_t points = 40;
};

void add_output_flag(CLI::App* cmd, std::string& output_path) {
    cmd->add_option("--output", output_path, "Write the result to this file instead of stdout");
}

void add_sweep_flags(CLI::App* cmd, sweep_options& sweep) {
    cmd->add_option("--omega-min", sweep.omega_min, "Lower sweep frequency (rad/s)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--omega-max", sweep.omega_max, "Upper sweep frequency (rad/s)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--points", sweep.points, "Number of log-spaced sweep points")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}))
        ->capture_default_str();
}

std::string csv_complex(double omega, cdouble y) {
    std::string row = format_double(omega);
    row += ',';
    row += format_double(y.real());
    row += ',';
    row += format_double(y.imag());
    return row;
}

/// Writes the buffered result to the chosen destination in one shot, so a
/// failed command never leaves partial output behind.
void deliver(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw parameter_error("cannot open output file: " + output_path);
    file << text;
    if (!file.good()) throw parameter_error("cannot write output file: " + output_path);
}

void run_parse(const std::string& text, const std::string& output_path) {
    const circuit c = parse_circuit(text);
    deliver(format_circuit(c) + "\n", output_path);
}

void run_rational(const std::string& text, const std::string& output_path) {
    const circuit c = parse_circuit(text);
    deliver(format_rational(circuit_to_rational(c)) + "\n", output_path);
}

void run_admittance(const std::string& text, const sweep_options& sweep, double single_omega,
                    bool has_single_omega, const std::string& output_path) {
    const circuit c = parse_circuit(text);
    std::vector<double> omegas;
    if (has_single_omega) {
        omegas.push_back(single_omega);
    } else {
        omegas = log_spaced(sweep.omega_min, sweep.omega_max, sweep.points);
    }
    std::string out = "omega,re_y,im_y\n";
    for (double omega : omegas) out += csv_complex(omega, eval_admittance(c, omega)) + "\n";
    deliver(out, output_path);
}

void run_exponent(double sigma, double a1, double b1, const sweep_options& sweep,
                  double rel_tol, std::size_t depth, const std::string& output_path) {
    const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(a1, b1, sigma);
    const std::vector<double> omegas = log_spaced(sweep.omega_min, sweep.omega_max, sweep.points);
    std::vector<admittance_sample> samples;
    samples.reserve(omegas.size());
    std::size_t not_converged = 0;
    for (double omega : omegas) {
        const asymptotic_result result = asymptotic_admittance(spec, omega, rel_tol, depth);
        if (!result.converged) ++not_converged;
        samples.push_back(admittance_sample{omega, result.y});
    }
    if (not_converged > 0)
        std::cerr << "warning: asymptotic admittance did not converge at " << not_converged
                  << " of " << omegas.size() << " frequencies (depth limit " << depth << ")\n";
    const omega_window window(sweep.omega_min, sweep.omega_max);
    const exponent_fit fit = estimate_exponent(samples, window);
    std::string out = "sigma,a1,b1,gamma,k,r2,omega_min,omega_max,points\n";
    out += format_double(sigma);
    out += ',';
    out += format_double(a1);
    out += ',';
    out += format_double(b1);
    out += ',';
    out += format_double(fit.gamma);
    out += ',';
    out += format_double(fit.k);
    out += ',';
    out += format_double(fit.r2);
    out += ',';
    out += format_double(window.omega_min);
    out += ',';
    out += format_double(window.omega_max);
    out += ',';
    out += std::to_string(fit.points);
    out += '\n';
    deliver(out, output_path);
}

void run_scaling_check(double sigma, double a1, double b1, std::size_t depth,
                       const sweep_options& sweep, const std::string& output_path) {
    const fractal_ladder_spec spec = fractal_ladder_spec::oustaloup(a1, b1, sigma);
    const std::vector<double> omegas = log_spaced(sweep.omega_min, sweep.omega_max, sweep.points);
    std::string out = "sigma,a1,b1,n,omega,residual\n";
    const std::string prefix =
        format_double(sigma) + "," + format_double(a1) + "," + format_double(b1) + "," +
        std::to_string(depth) + ",";
    for (double omega : omegas) {
        out += prefix;
        out += format_double(omega);
        out += ',';
        out += format_double(scaling_residual(spec, depth, omega));
        out += '\n';
    }
    deliver(out, output_path);
}

void run_diffusion_compare(double z1, double delta, std::size_t n, double r0, double l0,
                           line_termination termination, const sweep_options& sweep,
                           const std::string& output_path) {
    const geometric_grid grid(z1, delta, n);
    if (!grid_adequate(grid, r0, l0, sweep.omega_min)) {
        const double needed = 3.0 * std::sqrt(r0 / (sweep.omega_min * l0));
        throw insufficient_data_error(
            "grid-adequacy warning: grid extends to " + format_double(grid.points().back()) +
            " but omega-min " + format_double(sweep.omega_min) + " needs at least " +
            format_double(needed) + "; enlarge n or raise omega-min");
    }
    const grid_ladder ladder = ladder_from_grid(grid, r0, l0);
    const std::vector<double> omegas = log_spaced(sweep.omega_min, sweep.omega_max, sweep.points);
    std::string out =
        "omega,re_y_ladder,im_y_ladder,re_y_line,im_y_line,re_y_continuum,im_y_continuum\n";
    double max_discrepancy = 0.0;
    std::vector<double> log_omega;
    std::vector<double> log_mag;
    log_omega.reserve(omegas.size());
    log_mag.reserve(omegas.size());
    for (double omega : omegas) {
        const cdouble y_ladder = ladder_admittance_cf(ladder.stages, omega);
        const line_solution line =
            solve_discrete_line(diffusion_problem{grid, r0, l0, omega, termination});
        const cdouble y_continuum = continuum_admittance(r0, l0, omega);
        const double discrepancy = std::abs(line.y_in - y_ladder) / std::abs(y_ladder);
        if (discrepancy > max_discrepancy) max_discrepancy = discrepancy;
        log_omega.push_back(std::log(omega));
        log_mag.push_back(std::log(std::abs(line.y_in)));
        out += format_double(omega);
        out += ',';
        out += format_double(y_ladder.real());
        out += ',';
        out += format_double(y_ladder.imag());
        out += ',';
        out += format_double(line.y_in.real());
        out += ',';
        out += format_double(line.y_in.imag());
        out += ',';
        out += format_double(y_continuum.real());
        out += ',';
        out += format_double(y_continuum.imag());
        out += '\n';
    }
    const line_fit fit = fit_line(log_omega, log_mag);
    out += "summary," + format_double(max_discrepancy) + "," + format_double(fit.slope) + "\n";
    deliver(out, output_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ladderlab: frequency-domain analysis of recursive R-L ladder networks"};
    app.require_subcommand(1);

    std::string output_path;

    // parse
    std::string parse_text;
    CLI::App* cmd_parse = app.add_subcommand("parse", "Parse a circuit and print its canonical form");
    cmd_parse->add_option("circuit", parse_text, "Circuit expression, e.g. \"L:1 - (R:2 | L:0.5)\"")
        ->required();
    add_output_flag(cmd_parse, output_path);

    // admittance
    std::string adm_text;
    sweep_options adm_sweep;
    double adm_omega = 0.0;
    CLI::App* cmd_adm = app.add_subcommand("admittance", "Sweep a circuit's admittance over omega");
    cmd_adm->add_option("circuit", adm_text, "Circuit expression")->required();
    add_sweep_flags(cmd_adm, adm_sweep);
    CLI::Option* adm_omega_opt =
        cmd_adm->add_option("--omega", adm_omega, "Evaluate at a single frequency instead of sweeping")
            ->check(CLI::PositiveNumber);
    add_output_flag(cmd_adm, output_path);

    // rational
    std::string rat_text;
    CLI::App* cmd_rat =
        app.add_subcommand("rational", "Print a circuit's admittance as a rational function of s");
    cmd_rat->add_option("circuit", rat_text, "Circuit expression")->required();
    add_output_flag(cmd_rat, output_path);

    // exponent
    double exp_sigma = 1.1, exp_a1 = 1.0, exp_b1 = 1.0, exp_rel_tol = 1e-10;
    std::size_t exp_depth = 65536;
    sweep_options exp_sweep{1e-6, 1e-3, 40};
    CLI::App* cmd_exp = app.add_subcommand(
        "exponent", "Fit the low-frequency power law of a deep recursive ladder");
    cmd_exp->add_option("--sigma", exp_sigma, "Inertance scale per stage")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_exp->add_option("--a1", exp_a1, "First-stage inertance (H)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_exp->add_option("--b1", exp_b1, "First-stage resistance (ohm)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_sweep_flags(cmd_exp, exp_sweep);
    cmd_exp->add_option("--rel-tol", exp_rel_tol, "Relative stop tolerance for the depth doubling")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_exp->add_option("--depth", exp_depth, "Depth limit for the doubling search")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 30))
        ->capture_default_str();
    add_output_flag(cmd_exp, output_path);

    // scaling-check
    double scl_sigma = 2.0, scl_a1 = 1.0, scl_b1 = 1.0;
    std::size_t scl_depth = 12;
    sweep_options scl_sweep;
    CLI::App* cmd_scl = app.add_subcommand(
        "scaling-check", "Report the finite-depth scaling-identity residual over a sweep");
    cmd_scl->add_option("--sigma", scl_sigma, "Inertance scale per stage")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_scl->add_option("--a1", scl_a1, "First-stage inertance (H)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_scl->add_option("--b1", scl_b1, "First-stage resistance (ohm)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_scl->add_option("--depth", scl_depth, "Truncation depth n")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
        ->capture_default_str();
    add_sweep_flags(cmd_scl, scl_sweep);
    add_output_flag(cmd_scl, output_path);

    // diffusion-compare
    double dif_z1 = 1.0, dif_delta = 0.1, dif_r0 = 1.0, dif_l0 = 1.0;
    std::size_t dif_n = 120;
    std::string dif_termination = "short";
    sweep_options dif_sweep{1e-5, 1e-3, 40};
    CLI::App* cmd_dif = app.add_subcommand(
        "diffusion-compare", "Compare ladder, discrete-line, and continuum admittances");
    cmd_dif->add_option("--z1", dif_z1, "First grid point (m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_dif->add_option("--delta", dif_delta, "Geometric grid increment")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_dif->add_option("--n", dif_n, "Grid point count")
        ->check(CLI::Range(std::size_t{3}, std::size_t{100000}))
        ->capture_default_str();
    cmd_dif->add_option("--r0", dif_r0, "Per-length resistance constant (ohm*m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_dif->add_option("--l0", dif_l0, "Per-length inertance constant (H/m)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_dif
        ->add_option("--termination", dif_termination,
                     "Far-end convention: short (closed ladder) or open")
        ->check(CLI::IsMember({"short", "open"}))
        ->capture_default_str();
    add_sweep_flags(cmd_dif, dif_sweep);
    add_output_flag(cmd_dif, output_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_parse->parsed()) {
            run_parse(parse_text, output_path);
        } else if (cmd_adm->parsed()) {
            run_admittance(adm_text, adm_sweep, adm_omega, adm_omega_opt->count() > 0,
                           output_path);
        } else if (cmd_rat->parsed()) {
            run_rational(rat_text, output_path);
        } else if (cmd_exp->parsed()) {
            run_exponent(exp_sigma, exp_a1, exp_b1, exp_sweep, exp_rel_tol, exp_depth,
                         output_path);
        } else if (cmd_scl->parsed()) {
            run_scaling_check(scl_sigma, scl_a1, scl_b1, scl_depth, scl_sweep, output_path);
        } else if (cmd_dif->parsed()) {
            run_diffusion_compare(dif_z1, dif_delta, dif_n, dif_r0, dif_l0,
                                  dif_termination == "short" ? line_termination::short_circuit
                                                             : line_termination::open_circuit,
                                  dif_sweep, output_path);
        }
    } catch (const source_error& e) {
        std::cerr << "parse error at offset " << e.position() << ": " << e.what() << "\n";
        return 2;
    } catch (const ladderlab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
