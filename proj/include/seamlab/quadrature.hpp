#pragma once

#include <array>
#include <functional>

#include "seamlab/errors.hpp"
#include "seamlab/types.hpp"

namespace seamlab {

enum class VariableTransform {
    DoubleExponentialHalfline, // x = exp((pi/2) sinh v), for (0, inf)
    DoubleExponentialRealLine, // x = sinh((pi/2) sinh v), for (-inf, inf)
    LogSubstitution,           // x = e^y, melting t^s dt/t into e^{sy} dy
};

struct QuadratureSpec {
    int node_count = 64; // nodes at the coarsest level, >= 16
    VariableTransform transform = VariableTransform::LogSubstitution;
    double target_tol = 1e-10;
    int refinement_limit = 8; // each refinement doubles the node count
};

// Throws ConfigError when a spec violates its own invariants
// (node_count >= 16, positive tolerance, non-negative refinement budget).
void validate(const QuadratureSpec& spec);

struct TransformResult {
    cplx value{};
    double est_error = 0.0; // |difference of the last two refinement levels|
    long nodes_used = 0;
    bool converged = false; // true only if est_error <= target_tol
};

// --- reusable engines ------------------------------------------------------
//
// All engines share the same refinement contract: evaluate at the coarsest
// density implied by spec.node_count, double the density per level, stop when
// two consecutive levels agree to target_tol or the refinement budget is
// spent.  None of them throw on non-convergence -- the transform layer
// decides whether that is an error for the integral at hand.

// Trapezoid ladder on a fixed window [a, b].
TransformResult trapezoid_refine(const std::function<cplx(double)>& g,
                                 double a, double b,
                                 const QuadratureSpec& spec);

// Double-exponential rules.  The half-line rule integrates g over (0, inf),
// the real-line rule over (-inf, inf); both assume g already decays (at
// least exponentially in the transformed variable) and are worthless for
// oscillatory weights -- use fourier_halfline for those.
TransformResult de_halfline(const std::function<cplx(double)>& g,
                            const QuadratureSpec& spec);
TransformResult de_real_line(const std::function<cplx(double)>& g,
                             const QuadratureSpec& spec);

// Composite 12-point Gauss-Legendre over [a, b] split into n_panels panels.
// The building block of the panel-based engines below; exposed for tests.
cplx gl12_panels(const std::function<cplx(double)>& g, double a, double b,
                 long n_panels);

// sum_{k} f(y) e^{-i w y} over [0, y_max]: composite Gauss-Legendre in
// per-period segments of length min(2 pi / |Re w|, seg_cap); partial sums
// accumulated per period and Aitken-extrapolated when the tail is still
// alive at the truncation point (slow envelope decay).  Periods where the
// envelope has gone below machine noise are skipped wholesale.
TransformResult fourier_halfline(const std::function<double(double)>& f,
                                 cplx w, double y_max,
                                 const QuadratureSpec& spec,
                                 double seg_cap = 0.5);

// Node/weight tables for the 12-point Gauss-Legendre rule on [-1, 1],
// exposed so tests can verify them against the defining properties.
const std::array<double, 12>& gl12_nodes();
const std::array<double, 12>& gl12_weights();

} // namespace seamlab
