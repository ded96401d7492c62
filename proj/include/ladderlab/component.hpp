#pragma once

#include <cmath>

#include "error.hpp"

namespace ladderlab {

/// Kind of a primitive two-terminal element.
enum class component_kind { resistor, inertance };

/// A primitive element: a resistance in ohms or an inertance in henries.
/// The value is strictly positive and finite; both admittance rules divide by it.
class component {
public:
    component(component_kind kind, double value) : kind_(kind), value_(value) {
        if (!std::isfinite(value)) throw domain_error("non-finite component value");
        if (value <= 0.0) throw domain_error("non-positive component value");
    }

    [[nodiscard]] component_kind kind() const noexcept { return kind_; }
    [[nodiscard]] double value() const noexcept { return value_; }

    [[nodiscard]] bool operator==(const component&) const noexcept = default;

private:
    component_kind kind_;
    double value_;
};

[[nodiscard]] inline component resistor(double ohms) {
    return component(component_kind::resistor, ohms);
}

[[nodiscard]] inline component inertance(double henries) {
    return component(component_kind::inertance, henries);
}

} // namespace ladderlab
