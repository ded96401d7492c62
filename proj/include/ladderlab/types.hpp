#pragma once

#include <complex>

namespace ladderlab {

using cdouble = std::complex<double>;

/// One rung of a recursive ladder: the series inertance (henries) that carries
/// the line forward and the shunt resistance (ohms) that closes the rung.
struct ladder_stage {
    double inertance;
    double resistance;

    [[nodiscard]] bool operator==(const ladder_stage&) const noexcept = default;
};

} // namespace ladderlab
