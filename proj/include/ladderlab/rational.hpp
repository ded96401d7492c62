#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "format.hpp"
#include "polynomial.hpp"
#include "types.hpp"

namespace ladderlab {

/// Ratio of two complex polynomials with a monic denominator.
///
/// No polynomial GCD reduction is attempted: numeric GCDs are ill conditioned
/// and pointwise values are the contract here, so common factors may persist.
/// Degrees therefore only ever grow additively under combination.
class rational_function {
public:
    rational_function(polynomial numerator, polynomial denominator) {
        if (denominator.is_zero())
            throw domain_error("rational function needs a nonzero denominator");
        const cdouble lead = denominator.coefficients().back();
        numerator_ = numerator.scaled(1.0 / lead);
        std::vector<cdouble> monic = denominator.scaled(1.0 / lead).coefficients();
        monic.back() = cdouble(1.0, 0.0); // exact, independent of rounding in the division
        denominator_ = polynomial(std::move(monic));
    }

    /// Constant function value/1.
    [[nodiscard]] static rational_function constant(cdouble value) {
        return rational_function(polynomial::constant(value),
                                 polynomial::constant(cdouble(1.0, 0.0)));
    }

    [[nodiscard]] const polynomial& numerator() const noexcept { return numerator_; }
    [[nodiscard]] const polynomial& denominator() const noexcept { return denominator_; }

    /// Pointwise value; refuses evaluation within 1e-300 of a denominator zero.
    [[nodiscard]] cdouble eval(cdouble s) const {
        const cdouble den = denominator_.eval(s);
        if (std::abs(den) < 1e-300) throw pole_error("evaluation at a pole");
        return numerator_.eval(s) / den;
    }

    /// Parallel combination: plain sum num_a/den_a + num_b/den_b.
    friend rational_function operator+(const rational_function& a, const rational_function& b) {
        return rational_function(a.numerator_ * b.denominator_ + b.numerator_ * a.denominator_,
                                 a.denominator_ * b.denominator_);
    }

    [[nodiscard]] bool operator==(const rational_function&) const = default;

private:
    polynomial numerator_;
    polynomial denominator_;
};

/// Series combination 1/(1/a + 1/b) = (num_a num_b) / (num_a den_b + num_b den_a).
/// An identically zero operand would make the result identically zero with an
/// indeterminate representation, so it is rejected.
[[nodiscard]] inline rational_function reciprocal_sum(const rational_function& a,
                                                      const rational_function& b) {
    if (a.numerator().is_zero() || b.numerator().is_zero())
        throw singular_series_error("series combination of an identically zero admittance");
    return rational_function(a.numerator() * b.numerator(),
                             a.numerator() * b.denominator() + b.numerator() * a.denominator());
}

namespace detail {

inline std::string format_coefficient(cdouble c) {
    if (c.imag() == 0.0) return format_double(c.real());
    std::string out = "(";
    out += format_double(c.real());
    if (!std::signbit(c.imag())) out += '+';
    out += format_double(c.imag());
    out += "j)";
    return out;
}

/// Ascending-degree sum "c0 + c1\xC2\xB7s + c2\xC2\xB7s^2 + ...". Functions
/// built from circuits keep their coefficients exactly real.
inline std::string format_polynomial(const polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const std::vector<cdouble>& coeffs = p.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (!out.empty()) out += " + ";
        out += format_coefficient(coeffs[k]);
        if (k == 1) {
            out += "\xC2\xB7s";
        } else if (k >= 2) {
            out += "\xC2\xB7s^";
            out += std::to_string(k);
        }
    }
    return out;
}

} // namespace detail

/// "(num)/(den)" with both polynomials in ascending-degree form.
[[nodiscard]] inline std::string format_rational(const rational_function& f) {
    return "(" + detail::format_polynomial(f.numerator()) + ")/(" +
           detail::format_polynomial(f.denominator()) + ")";
}

} // namespace ladderlab
