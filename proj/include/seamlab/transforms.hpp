#pragma once

#include <functional>
#include <vector>

#include "seamlab/errors.hpp"
#include "seamlab/quadrature.hpp"
#include "seamlab/types.hpp"

namespace seamlab {

// A vertical strip (bounds on Re) or horizontal strip (bounds on Im),
// depending on axis.  Open in both directions.
enum class StripAxis { RealPart, ImagPart };

struct StripSpec {
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    StripAxis axis = StripAxis::RealPart;
};

// Laplace evaluation refused outside the empirically measured strip; the
// strip the growth scan produced rides along so callers can report it.
struct OutsideStripError : Error {
    StripSpec measured;
    OutsideStripError(const std::string& msg, StripSpec strip)
        : Error(msg), measured(strip) {}
};

// Mellin transform  integral of f(t) t^s dt/t  over (0, inf).  Internally a
// log substitution t = e^y, then the node rule selected by spec.transform
// (default: doubly-exponential half-line nodes).  Tail growth of the
// log-substituted integrand is sampled first and DivergentTailError thrown
// if the integral cannot converge at this s; NonConvergentError if the
// refinement budget runs out.
TransformResult mellin_halfline(const std::function<double(double)>& f,
                                cplx s, const QuadratureSpec& spec);

// F_arch(z) = integral of Theta(t) t^{3/4 + iz} dt/t: equals Xi(2z) within
// combined series + quadrature error.  The completed-theta evaluator it
// integrates is the one from the kernel layer, so this is a genuine
// two-route check against the direct Xi formula.
TransformResult F_arch(cplx z, const QuadratureSpec& spec);

// |LHS - RHS| of the integration-by-parts identity
//   integral (A f) t^s dt/t = (s-1)(s-1/2) integral f t^{s-1/2} dt/t,
// LHS through the numeric stencil operator, RHS by plain Mellin.
double mellin_A_identity_residual(const std::function<double(double)>& f,
                                  cplx s, const QuadratureSpec& spec);

// Bilateral Laplace  integral of f(x) e^{-sx} dx  over the whole line.
// The engine first measures the exponential growth of |f| at x = +-(10,
// 20, 40), derives the open convergence strip, and refuses evaluation
// outside it (OutsideStripError, measured strip attached).
struct BilateralResult {
    TransformResult result;
    StripSpec measured_strip;
};
BilateralResult bilateral_laplace(const std::function<double(double)>& f,
                                  cplx s, const QuadratureSpec& spec);

// Left-strip continuation of the Phi* Laplace transform:
//   B_LB(s) = integral_0^inf Phi*(x) e^{-sx} dx
//           + integral_0^inf Phi*(x) e^{-(1/2-s)x} dx,
// using only the x >= 0 kernel.  Admissible for -3/4 < Re s < 5/4 (each
// half-line piece converges on one side of that range).  The two pieces are
// computed by the same code path, so the reflection s <-> 1/2-s swaps the
// addends and the symmetry holds bitwise.
TransformResult B_LB(cplx s, const QuadratureSpec& spec);

// B_LB along the line Re s = -1/2: boundary_formula(z) = B_LB(-1/2 + iz),
// same code path by construction.
TransformResult boundary_formula(double z, const QuadratureSpec& spec);

// Residual of the left-boundary identity  Xi(2z) = 2 pi (z^2 + 1/16) *
// B_LB(-1/2 + iz).  Reported, not asserted: the interesting acceptance
// property is that the residual is reproducible across quadrature depths.
struct LBIdentityRecord {
    cplx lhs{};
    cplx rhs{};
    double residual = 0.0;
};
LBIdentityRecord lb_identity_residual(double z, const QuadratureSpec& spec);

// Residual of the bridge identity on the strip |Im w| < 1/2:
//   X(w) = U(w) F(w),  X(w) = xi(1/2 - iw),  U(w) = pi (4w^2 + 1)/8,
//   F(w) = B_LB(-1/2 - iw/2).
double bridge_residual(cplx w, const QuadratureSpec& spec);

// Magnitudes of f(t) t^s and f'(t) t^{s+1} at t = epsilon and t = R (the
// boundary terms of the integration-by-parts step; both must vanish in the
// limits for the identity to hold).  f' by central difference internally.
struct BoundaryTermRecord {
    double f_eps = 0.0, df_eps = 0.0; // |f(e) e^s|, |f'(e) e^{s+1}|
    double f_R = 0.0, df_R = 0.0;     // same at t = R
    double at_zero = 0.0;             // max of the epsilon pair
    double at_infinity = 0.0;         // max of the R pair
};
BoundaryTermRecord boundary_term_monitor(const std::function<double(double)>& f,
                                         cplx s, double epsilon, double R);

// Riemann-Lebesgue / IBP decay check for I(w) = integral_0^inf f(y) e^{-iwy}
// dy: the defect |iw I(w) - f(0)| should shrink like 1/|Re w| uniformly over
// the admissible horizontal strip.  ibp_crosscheck evaluates the same defect
// through the derivative route |integral f'(y) e^{-iwy} dy| -- equal
// analytically, computed from independent quadrature.
struct RLEntry {
    cplx w{};
    cplx I{};
    double defect = 0.0;
    double ibp_crosscheck = 0.0;
};
struct RLReport {
    std::vector<RLEntry> entries; // sorted by increasing |Re w|
};
RLReport strip_RL_check(const std::function<double(double)>& f,
                        const std::function<double(double)>& fprime,
                        const std::vector<cplx>& w_list,
                        const QuadratureSpec& spec);

} // namespace seamlab
