#pragma once

#include <functional>
#include <vector>

#include "seamlab/errors.hpp"
#include "seamlab/log_complex.hpp"
#include "seamlab/types.hpp"

namespace seamlab {

// Closed rectangle |Re w| <= T, |Im w| <= eta, boundary oriented
// counterclockwise.
struct StripRectangle {
    double T = 1.0;
    double eta = 0.2;

    StripRectangle(double half_width, double half_height);
};

// Evaluator in log form: the contour layer works with log|f| and arg f so
// that functions spanning thousands of orders of magnitude (P_N at large N)
// can be traced without overflow.
using LogEvaluator = std::function<LogComplex(cplx)>;

// Wrap a plain complex evaluator for contour use.
LogEvaluator make_log_evaluator(std::function<cplx(cplx)> f);

struct BoundarySample {
    cplx w{};
    LogComplex f{};
    double log_mag = 0.0;   // == f.log_mag, duplicated for table export
    double arg_accum = 0.0; // continuous argument along the path
};

struct Indentation {
    cplx center{};
    double radius = 0.0;
};

struct BoundaryPath {
    std::vector<BoundarySample> samples; // closed: last sample == first point
    std::vector<Indentation> indentations;
    double max_step = 0.0; // largest |delta arg| between consecutive samples
    int refinements = 0;   // bisections spent meeting the pi/2 guarantee
};

// Walk the rectangle boundary counterclockwise, detour around boundary
// zeros (|f| < zero_tol) on interior semicircles of radius indent_radius
// (quarter circles when the zero sits in a corner), and refine sampling
// until consecutive argument steps are below pi/2.
//
// Throws IndentationOverlapError when two detours would intersect,
// NonRectifiableError when refinement hits its depth limit -- in practice a
// zero sitting on the path just below the detection threshold.
BoundaryPath trace_boundary(const LogEvaluator& f, const StripRectangle& rect,
                            double zero_tol, double indent_radius);

struct WindingReport {
    int winding = 0;
    double total_arg_change = 0.0;
    double max_step = 0.0;
    int refinements = 0;
};

// Argument principle: winding = total boundary argument change / 2 pi.
// Throws AmbiguousWindingError when the total is further than 0.01 from an
// integer multiple of 2 pi (the tighter of the two drift budgets the report
// format allows, so any returned report satisfies both).
WindingReport winding_number(const BoundaryPath& path);

// Normalized seam ratio  R~(w) = Xi(2w) / (unit(w) * P_N(w))  in log form.
// Throws PoleAtZeroOfPNError when q~_N(w) lands on an eigenvalue exactly
// (w = 0 always does: lambda_0 = 0), DomainError when the unit vanishes.
using UnitEvaluator = std::function<cplx(cplx)>;
LogComplex seam_ratio(cplx w, int N, const UnitEvaluator& unit);

// The bridge unit U(w) = pi (4 w^2 + 1)/8 -- the default unit for seam
// scans; zero-free on |Im w| < 1/2.
cplx bridge_unit(cplx w);

struct SeparationReport {
    double T = 0.0;
    double eta = 0.0;
    int N = 0;
    double sup_diff = 0.0; // sup |X - U P_N| over the rectangle boundary
    double inf_ref = 0.0;  // inf |U P_N| over the rectangle boundary
    bool holds = false;    // sup_diff < inf_ref
    // Rouche cross-check, run only when the inequality holds: both windings
    // must agree for the equal-zero-count conclusion to be consistent.
    bool windings_checked = false;
    int winding_X = 0;
    int winding_ref = 0;
};

// Boundary separation inequality sup |X - U P_N| < inf |U P_N| with
// X(w) = Xi(2w), sampled on at least `samples` boundary points plus the
// adaptively refined argument-tracking set.
SeparationReport separation_scan(const StripRectangle& rect, int N,
                                 const UnitEvaluator& unit, int samples);

struct SectorReport {
    double T = 0.0;
    double eta = 0.0;
    double theta_max = 0.0; // max |continuous arg of the seam ratio|
    bool contains_zero_on_boundary = false;
};

// Maximum of the continuous argument of the seam ratio along the rectangle
// boundary; theta is the sector half-angle the caller wants to compare
// against (must be in (0, pi/2) for the sector statement to mean anything).
SectorReport sector_scan(const StripRectangle& rect, int N,
                         const UnitEvaluator& unit, double theta);

// Boundary trace of the seam ratio itself.  The ratio's absolute magnitude
// moves by hundreds of orders of magnitude with N, so the zero threshold
// here is relative: 1e-9 times the median boundary magnitude, applied in
// log form.
BoundaryPath seam_boundary_trace(const StripRectangle& rect, int N,
                                 const UnitEvaluator& unit);

struct ZeroDivisorRecord {
    int winding_X = 0;
    int real_zeros_PN_in_T = 0;
    bool match = false;
};

// Winding of Xi(2 .) on the rectangle boundary against the count of real
// determinant zeros with |Re w| <= T.  The structural zero of P_N at the
// origin (lambda_0 = 0) is excluded unless include_origin is set: it is an
// artifact of the k = 0 mode, not a spectral zero candidate.  Note the
// counts compare distinct zero locations; paired eigenvalues make interior
// P_N zeros geometrically double.
ZeroDivisorRecord zero_divisor_compare(const StripRectangle& rect, int N,
                                       bool include_origin = false);

} // namespace seamlab
