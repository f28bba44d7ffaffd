#pragma once

#include <vector>

#include "seamlab/types.hpp"

namespace seamlab {

// Principal branch of log Gamma, continuous on the cut plane.  Strategy:
// conjugate symmetry to get Im z >= 0, reflection for Re z < 1/2, argument
// shift until |z| >= 12, then a 12-term Stirling series.  Throws PoleError
// at non-positive integers.
cplx log_gamma(cplx z);

// Riemann zeta by Euler-Maclaurin, accurate to ~1e-12 relative on the
// contract box -2 <= Re s <= 4, |Im s| <= 100 (and usable well beyond).
// For Re s < -1/2 the functional equation is applied first: the raw
// Euler-Maclaurin sum loses digits to cancellation left of the strip, while
// the reflected argument lands in the absolutely convergent regime.
// Throws PoleError at s = 1 exactly.
cplx zeta(cplx s);

// Completed zeta  xi(w) = 1/2 w(w-1) pi^{-w/2} Gamma(w/2) zeta(w),
// entire; computed in the pole-free arrangement
// (w-1) zeta(w) * pi^{-w/2} Gamma(w/2 + 1) with a series patch for the
// removable point at w = 1.  For Re w < -1.75 the value is taken from the
// mirror point 1-w: Gamma(w/2+1) has poles at w = -2, -4, ... that the
// trivial zeros of zeta cancel only analytically, not in floating point.
// The threshold sits strictly left of -1.5 so the symmetry check
// xi(w) = xi(1-w) on |Re w - 1/2| <= 2 compares two independently computed
// values rather than the reflection formula against itself.
cplx xi_completed(cplx w);

// Xi(z) = xi(1/2 + iz): real on the real axis, even.
cplx Xi(cplx z);

struct ZeroList {
    std::vector<double> ordinates; // positive ordinates, increasing
    double bracket_width = 0.0;    // final bisection bracket width
};

// Real zeros of Xi on (0, z_max]: sign-change scan with step 0.25 (minimum
// gap between consecutive ordinates below 100 is ~1.9, so no pair can hide
// in one step), then bisection down to width <= tol.
ZeroList locate_real_zeros(double z_max, double tol);

} // namespace seamlab
