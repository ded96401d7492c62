#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "circuit.hpp"
#include "component.hpp"
#include "error.hpp"
#include "rational.hpp"
#include "types.hpp"

namespace ladderlab {

/// One frequency-domain measurement: admittance y (siemens) at omega (rad/s).
struct admittance_sample {
    double omega;
    cdouble y;

    [[nodiscard]] bool operator==(const admittance_sample&) const noexcept = default;
};

namespace detail {

[[nodiscard]] inline bool is_finite(cdouble z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace detail

/// Admittance of a single element: 1/R for a resistor, -j/(L*omega) for an
/// inertance. Either sign of omega is allowed; zero is not for an inertance.
[[nodiscard]] inline cdouble component_admittance(const component& c, double omega) {
    if (c.kind() == component_kind::resistor) return cdouble(1.0 / c.value(), 0.0);
    if (omega == 0.0) throw zero_frequency_error("inertance admittance needs a nonzero frequency");
    return cdouble(0.0, -1.0 / (c.value() * omega));
}

/// Admittance of a circuit tree: parallel nodes sum branch admittances,
/// series nodes take the reciprocal of the summed reciprocals.
[[nodiscard]] inline cdouble eval_admittance(const circuit& c, double omega) {
    cdouble y(0.0, 0.0);
    switch (c.kind()) {
        case circuit_kind::leaf:
            y = component_admittance(c.element(), omega);
            break;
        case circuit_kind::parallel:
            for (const circuit& child : c.children()) y += eval_admittance(child, omega);
            break;
        case circuit_kind::series: {
            cdouble sum_reciprocal(0.0, 0.0);
            for (const circuit& child : c.children())
                sum_reciprocal += 1.0 / eval_admittance(child, omega);
            y = 1.0 / sum_reciprocal;
            break;
        }
    }
    if (!detail::is_finite(y)) throw overflow_error("non-finite admittance");
    return y;
}

/// Evaluates [a1, a2, ..., an] = a1 + 1/(a2 + 1/(... + 1/an)) tail-first:
/// acc <- an, then acc <- a_k + 1/acc for k = n-1 down to 1.
[[nodiscard]] inline cdouble continued_fraction_eval(std::span<const cdouble> entries) {
    if (entries.empty()) throw arity_error("continued fraction needs at least one entry");
    cdouble acc = entries.back();
    for (std::size_t k = entries.size() - 1; k-- > 0;) {
        if (std::abs(acc) < 1e-300)
            throw degenerate_fraction_error("continued-fraction tail vanished before a reciprocal");
        acc = entries[k] + 1.0 / acc;
    }
    if (!detail::is_finite(acc)) throw overflow_error("non-finite continued fraction");
    return acc;
}

/// Ladder admittance via its 2n-entry continued fraction
/// [1/R1, j*L1*omega, 1/R2, j*L2*omega, ...]; stage 1 is at the input.
/// Agrees with eval_admittance(build_ladder_forest(stages), omega).
[[nodiscard]] inline cdouble ladder_admittance_cf(std::span<const ladder_stage> stages,
                                                  double omega) {
    if (stages.empty()) throw arity_error("ladder needs at least one stage");
    if (omega == 0.0) throw zero_frequency_error("ladder admittance needs a nonzero frequency");
    for (const ladder_stage& stage : stages) {
        if (!(std::isfinite(stage.inertance) && stage.inertance > 0.0) ||
            !(std::isfinite(stage.resistance) && stage.resistance > 0.0))
            throw domain_error("non-positive component value");
    }
    std::vector<cdouble> entries;
    entries.reserve(2 * stages.size());
    for (const ladder_stage& stage : stages) {
        entries.emplace_back(1.0 / stage.resistance, 0.0);
        entries.emplace_back(0.0, stage.inertance * omega);
    }
    return continued_fraction_eval(entries);
}

/// Compiles a circuit into its admittance as a rational function of s.
/// Leaves become 1/R and 1/(L*s); junctions fold the parallel sum and the
/// series reciprocal-sum rules symbolically. rf eval at s = j*omega matches
/// eval_admittance.
[[nodiscard]] inline rational_function circuit_to_rational(const circuit& c) {
    switch (c.kind()) {
        case circuit_kind::leaf: {
            const component& element = c.element();
            if (element.kind() == component_kind::resistor)
                return rational_function::constant(cdouble(1.0 / element.value(), 0.0));
            return rational_function(
                polynomial::constant(cdouble(1.0, 0.0)),
                polynomial(std::vector<cdouble>{cdouble(0.0, 0.0), cdouble(element.value(), 0.0)}));
        }
        case circuit_kind::parallel: {
            rational_function acc = circuit_to_rational(c.children().front());
            for (std::size_t k = 1; k < c.children().size(); ++k)
                acc = acc + circuit_to_rational(c.children()[k]);
            return acc;
        }
        default: {
            rational_function acc = circuit_to_rational(c.children().front());
            for (std::size_t k = 1; k < c.children().size(); ++k)
                acc = reciprocal_sum(acc, circuit_to_rational(c.children()[k]));
            return acc;
        }
    }
}

} // namespace ladderlab
