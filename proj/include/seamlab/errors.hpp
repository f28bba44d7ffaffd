#pragma once

#include <stdexcept>
#include <string>

namespace seamlab {

// Common base so command runners can catch everything the numeric layers
// throw and fold it into a fail record instead of aborting the run.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation requested at a pole of the function (zeta at s = 1, gamma at
// non-positive integers).
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the domain the routine is specified for (stencil leaving
// (0,inf), Laplace point outside the admissible pre-strip, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A quadrature refinement ladder ran out of levels before the error
// estimate met the target.
struct NonConvergentError : Error {
    explicit NonConvergentError(const std::string& msg) : Error(msg) {}
};

// The integrand fails to decay in the integration variable, detected by the
// window scan before any nodes are spent.
struct DivergentTailError : Error {
    explicit DivergentTailError(const std::string& msg) : Error(msg) {}
};

// Plain-value characteristic-polynomial evaluation left double range; the
// log-form evaluator is the supported fallback.
struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// Two boundary indentations would intersect; the caller has to shrink the
// indentation radius or move the rectangle.
struct IndentationOverlapError : Error {
    explicit IndentationOverlapError(const std::string& msg) : Error(msg) {}
};

// The argument-continuity refinement on a boundary path hit its depth limit,
// usually because the path runs through (or too close to) a zero.
struct NonRectifiableError : Error {
    explicit NonRectifiableError(const std::string& msg) : Error(msg) {}
};

// Accumulated boundary argument is too far from a multiple of 2*pi to round.
struct AmbiguousWindingError : Error {
    explicit AmbiguousWindingError(const std::string& msg) : Error(msg) {}
};

// Seam-ratio evaluation at (or numerically on top of) a determinant zero.
struct PoleAtZeroOfPNError : Error {
    explicit PoleAtZeroOfPNError(const std::string& msg) : Error(msg) {}
};

// Malformed or out-of-range configuration input; message carries file:line
// or the offending key so the CLI user can fix the config directly.
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Filesystem failure while writing reports or grids.
struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace seamlab
