#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "types.hpp"

namespace ladderlab {

/// Dense polynomial over the complex numbers, coefficients in ascending
/// degree order. The zero polynomial is the empty coefficient list; any other
/// polynomial keeps a nonzero trailing coefficient, so degree() is size-1.
/// degree() reports -1 for the zero polynomial.
class polynomial {
public:
    polynomial() = default;

    explicit polynomial(std::vector<cdouble> coefficients)
        : coefficients_(std::move(coefficients)) {
        trim();
    }

    [[nodiscard]] static polynomial constant(cdouble c) {
        return polynomial(std::vector<cdouble>{c});
    }

    [[nodiscard]] bool is_zero() const noexcept { return coefficients_.empty(); }

    [[nodiscard]] int degree() const noexcept {
        return static_cast<int>(coefficients_.size()) - 1;
    }

    [[nodiscard]] const std::vector<cdouble>& coefficients() const noexcept {
        return coefficients_;
    }

    /// Horner evaluation.
    [[nodiscard]] cdouble eval(cdouble s) const noexcept {
        cdouble acc(0.0, 0.0);
        for (std::size_t k = coefficients_.size(); k-- > 0;) acc = acc * s + coefficients_[k];
        return acc;
    }

    [[nodiscard]] polynomial scaled(cdouble factor) const {
        std::vector<cdouble> out(coefficients_);
        for (cdouble& c : out) c *= factor;
        return polynomial(std::move(out));
    }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        std::vector<cdouble> out(std::max(a.coefficients_.size(), b.coefficients_.size()),
                                 cdouble(0.0, 0.0));
        for (std::size_t k = 0; k < a.coefficients_.size(); ++k) out[k] += a.coefficients_[k];
        for (std::size_t k = 0; k < b.coefficients_.size(); ++k) out[k] += b.coefficients_[k];
        return polynomial(std::move(out));
    }

    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return polynomial();
        std::vector<cdouble> out(a.coefficients_.size() + b.coefficients_.size() - 1,
                                 cdouble(0.0, 0.0));
        for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
            for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
                out[i + j] += a.coefficients_[i] * b.coefficients_[j];
        return polynomial(std::move(out));
    }

    [[nodiscard]] bool operator==(const polynomial&) const = default;

private:
    void trim() {
        while (!coefficients_.empty() && coefficients_.back() == cdouble(0.0, 0.0))
            coefficients_.pop_back();
    }

    std::vector<cdouble> coefficients_;
};

} // namespace ladderlab
