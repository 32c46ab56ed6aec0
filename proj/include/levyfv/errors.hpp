#pragma once

#include <stdexcept>
#include <string>

namespace levyfv {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Measure parameters out of range (order >= 2, atom at the origin, ...).
struct InvalidMeasure : Error {
    using Error::Error;
};

/// A moment/symbol quadrature failed to converge within its budget.
struct DivergentMoment : Error {
    using Error::Error;
};

/// Weight-assembly quadrature exhausted its subdivision budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// Truncated off-diagonal mass exceeds the configured fraction under diagonal_lump.
struct BandwidthTooSmall : Error {
    using Error::Error;
};

/// Kernel/grid spacing or shape disagreement.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// Explicit or IMEX step asked to run past its CFL bound.
struct CFLViolation : Error {
    using Error::Error;
};

/// Fixed-point solver hit max_iterations with residual above tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

/// Argument outside the documented domain (e.g. rate query with lambda >= 2).
struct OutOfRange : Error {
    using Error::Error;
};

/// Malformed experiment config; carries a line/field diagnostic.
struct ConfigError : Error {
    ConfigError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    explicit ConfigError(const std::string& what) : Error(what), line_no(0) {}
    int line_no;
};

}  // namespace levyfv
