#pragma once

#include <stdexcept>

namespace ladderlab {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A component value is outside its domain (non-positive or non-finite).
class domain_error : public error {
public:
    using error::error;
};

/// A model parameter (grid, window, tolerance, scale) is invalid.
class parameter_error : public error {
public:
    using error::error;
};

/// A composition received fewer parts than its arity requires.
class arity_error : public error {
public:
    using error::error;
};

/// A component of the wrong kind was supplied where the structure fixes the kind.
class kind_error : public error {
public:
    using error::error;
};

/// An inertance was evaluated at omega = 0, where its admittance is undefined.
class zero_frequency_error : public error {
public:
    using error::error;
};

/// An intermediate value left the finite floating-point range.
class overflow_error : public error {
public:
    using error::error;
};

/// A continued-fraction tail vanished below 1e-300 just before a reciprocal.
class degenerate_fraction_error : public error {
public:
    using error::error;
};

/// A rational function was evaluated at (numerically) a pole.
class pole_error : public error {
public:
    using error::error;
};

/// A series combination received an identically zero admittance.
class singular_series_error : public error {
public:
    using error::error;
};

/// A fit was requested with fewer samples than the estimator needs.
class insufficient_data_error : public error {
public:
    using error::error;
};

/// A ladder depth drove the geometric decorations out of floating-point range.
class depth_error : public error {
public:
    using error::error;
};

} // namespace ladderlab
