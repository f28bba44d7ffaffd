#pragma once

#include <vector>

#include "seamlab/log_complex.hpp"
#include "seamlab/theta_kernels.hpp"
#include "seamlab/types.hpp"

namespace seamlab {

// Continuous-time nearest-neighbor walk on the N-cycle with uniform
// conductance a.  The diffusion constant of the scaling limit equals a.
struct CycleModel {
    int N = 3;
    double a = 1.0;

    CycleModel(int n, double conductance);
    double D() const { return a; }
};

struct SpectralFamily {
    int N = 0;
    std::vector<double> eigenvalues; // lambda_k = 2 - 2 cos(2 pi k / N)
};

SpectralFamily eigenvalues(const CycleModel& model);

// Return/transition probability p_t(j) by the exact Fourier sum
//   (1/N) sum_k exp(-2 a t (1 - cos(2 pi k/N))) cos(2 pi k j / N).
// Never time-stepped: the CLT comparisons need error at roundoff scale.
double heat_kernel(const CycleModel& model, double t, long j);

// Wrapped Gaussian (4 pi D t)^{-1/2} sum_{|m| <= m_max} e^{-(j+mN)^2/(4Dt)}.
double wrapped_gaussian(const CycleModel& model, double t, long j, int m_max);

// The same density through its Fourier series
// (1/N) sum_k e^{-4 pi^2 D t k^2 / N^2} cos(2 pi k j / N) -- the other side
// of Poisson summation, used as the cross-check route.
double wrapped_gaussian_fourier(const CycleModel& model, double t, long j);

// Uniform local-CLT error at diffusive time: for s = N / L with
// L = sqrt(4 pi D), compare the exact kernel at time s^2 t against the plain
// (unwrapped) Gaussian density exp(-j^2/(4 D s^2 t)) / sqrt(4 pi D s^2 t),
// sup over one period of lattice sites.  The sup should scale like 1/N on a
// compact window of t.
struct UlcltRecord {
    double sup_error = 0.0;
    int N = 0;
    long argmax_j = 0;          // where the sup is attained (diagnostic)
    bool t_in_window = true;    // false flags t outside the declared window
};
UlcltRecord ulclt_report(const CycleModel& model, double t,
                         double t0 = 0.25, double t1 = 4.0);

// |N * p_{s^2 t}(0) - K_L(t)| with s = N/L: how far the desk-size cycle is
// from its scaling-limit trace.
double scaling_limit_residual(int N, double t, double L);

// Rescaled spectral map q~_N(w) = (N/2pi)^2 (2 - 2cos(2 pi w/N)), evaluated
// in the equivalent sin form (N/pi)^2 sin^2(pi w/N); entire, even, -> w^2.
cplx q_tilde(int N, cplx w);

// Spectral determinant P_N(w) = prod_k (q~_N(w) - lambda_k).  The plain form
// overflows double range once N is a few hundred -- it throws OverflowError
// there, and the log-form below is the supported evaluator for contour work.
cplx P_N(int N, cplx w);
LogComplex P_N_log(int N, cplx w);

// Zeros of P_N in the fundamental period strip |Re w| <= N/2 by closed-form
// inversion of sin(pi w/N) = +-(2 pi/N) sin(pi k/N) for each eigenvalue
// branch.  Real for every branch once N >= 7; for N <= 6 the branches with
// argument > 1 give complex zeros at Re w = +-N/2, which are reported, not
// hidden.  zero_tol is a verification knob: each returned zero is checked to
// kill its factor to that relative tolerance.
struct DeterminantZeros {
    int N = 0;
    std::vector<cplx> zeros;
    double max_imag = 0.0;
};
DeterminantZeros determinant_zeros(int N, double zero_tol = 1e-10);

} // namespace seamlab
