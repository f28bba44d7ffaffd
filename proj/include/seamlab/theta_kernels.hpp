#pragma once

#include <cmath>
#include <vector>

#include "seamlab/errors.hpp"

namespace seamlab {

// Lattice/continuum scale pair locked to the self-dual relation L^2 = 4 pi D.
// Constructed from D; L is derived, never set independently.
struct SelfDualScale {
    double L = 0.0;
    double D = 0.0;

    explicit SelfDualScale(double diffusion);
};

// Where theta-type series are allowed to stop.  A series evaluator stops as
// soon as its computable tail bound drops below tail_tol, and throws
// DomainError if that has not happened by n_max terms.
struct TruncationPolicy {
    double tail_tol = 1e-14;
    int n_max = 64;
};

// One kernel evaluation with bookkeeping, for tables and reports.
struct KernelSample {
    double t = 0.0;
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0; // bound actually achieved, not the target
};

// One-sided theta sum  S(u) = sum_{n>=1} exp(-pi n^2 u).  The building
// block of everything below; exposed because the Laplace layer fuses it
// with exponential weights to keep integrands overflow-free.  Callers
// should hand it u >= 1 (invert first) or the term count explodes.
double theta_series_sum(double u, const TruncationPolicy& pol = {});

// Jacobi theta  theta(u) = sum_{n in Z} exp(-pi n^2 u), u > 0.
// u < 1 goes through the inversion theta(u) = u^{-1/2} theta(1/u) so the
// series is always evaluated where it converges in a handful of terms.
// For pi*u beyond ~745 every n != 0 term underflows and the function
// returns exactly 1.0; that is documented behavior, not an error.
double theta_jacobi(double u, const TruncationPolicy& pol = {});
KernelSample theta_jacobi_sample(double u, const TruncationPolicy& pol = {});

// Heat-trace kernel K_L(t) at the self-dual scale: sum_{n in Z}
// exp(-4 pi^2 D n^2 t / L^2).  With L^2 = 4 pi D the exponent rate is pi and
// this is theta_jacobi(t) up to roundoff in the stored scale fields.
double trace_kernel_KL(double t, const SelfDualScale& scale,
                       const TruncationPolicy& pol = {});

// Archimedean completion operator  (A f)(t) = d/dt ( t^{3/2} f'(t) ),
// compact 4-point stencil with one internal Richardson step (needs f only on
// [t-2h, t+2h]).  Throws DomainError if the stencil would leave (0, inf).
template <class F>
double arch_completion_apply(const F& f, double t, double h);

// Completed theta  Theta(t) = (A theta)(t) summed termwise:
//   t >= 1:  sum_{n>=1} (2 pi^2 n^4 t^{3/2} - 3 pi n^2 t^{1/2}) e^{-pi n^2 t}
//   t  < 1:  the same operator applied to the inverted series,
//            sum_{n>=1} (2 pi^2 n^4 t^{-3} - 3 pi n^2 t^{-2}) e^{-pi n^2 / t}.
// The switch at t = 1 keeps every exponential argument >= pi.
double theta_completed(double t, const TruncationPolicy& pol = {});

// d/dt of theta_completed, termwise on the active branch.
double theta_completed_deriv(double t, const TruncationPolicy& pol = {});

// The four centered kernels at the self-dual scale:
//   Ktilde          = K(t) - t^{-1/2}
//   Ktilde_star     = Ktilde - 1
//   Ktilde_sym      = t^{-1/2} Ktilde
//   Ktilde_star_sym = t^{-1/2} Ktilde_star
// For t < 1 the subtraction K(t) - t^{-1/2} is done analytically through the
// inversion (the two t^{-1/2} terms cancel exactly), so no digits are lost
// where both terms blow up.
struct CenteredKernels {
    double Ktilde = 0.0;
    double Ktilde_star = 0.0;
    double Ktilde_sym = 0.0;
    double Ktilde_star_sym = 0.0;
};
CenteredKernels centered_kernels(double t, const TruncationPolicy& pol = {});

// Phi*(x) = e^{-x/4} Ktilde_star(e^x) on the whole line; x < 0 goes through
// the inverted representation 2 e^{-3x/4} S(e^{-x}) - e^{-x/4} where
// S(u) = sum_{n>=1} e^{-pi n^2 u}.  For x >= ~6.5, S underflows and
// Phi*(x) = -e^{-3x/4} to all bits.
double phi_star(double x, const TruncationPolicy& pol = {});

// Reflection diagnostic  Phi*(-x) - e^{beta x} Phi*(x), x > 0.  Identically
// zero at beta = 1; evaluated at other beta it measures how wrong that
// exponent would be.
double twist_residual(double x, double beta, const TruncationPolicy& pol = {});

// f_theta(y) = 2 e^{-y/2} S(e^y) on [0, inf), and its derivative.
double f_theta(double y, const TruncationPolicy& pol = {});
double f_theta_deriv(double y, const TruncationPolicy& pol = {});

// sup of  t^{(alpha+1)/2} * sum_n n^alpha e^{-pi n^2 t}  over grid points
// t <= 1, and of the bare sum over grid points t >= 1.  A quick numerical
// check that the small-t blowup of weighted theta sums has the advertised
// power and the large-t side stays bounded.
struct GaussianSumBound {
    double sup_small_t = 0.0; // weighted by t^{(alpha+1)/2}
    double sup_large_t = 0.0; // bare sum
};
GaussianSumBound gaussian_sum_bound_check(int alpha,
                                          const std::vector<double>& grid,
                                          const TruncationPolicy& pol = {});

// --- template definition -------------------------------------------------

template <class F>
double arch_completion_apply(const F& f, double t, double h) {
    if (!(h > 0.0))
        throw DomainError("arch_completion_apply: step must be positive");
    if (!(t - 2 * h > 0.0))
        throw DomainError("arch_completion_apply: stencil leaves (0, inf)");
    // Compact stencil: g(tau) = tau^{3/2} f'(tau) at tau = t +- hh from
    // centered differences of f over 2hh, then (A f)(t) = (g(t+hh)-g(t-hh))/2hh.
    auto stencil = [&](double hh) {
        const double fp2 = f(t + 2 * hh), f0 = f(t), fm2 = f(t - 2 * hh);
        const double gp = std::pow(t + hh, 1.5) * (fp2 - f0);
        const double gm = std::pow(t - hh, 1.5) * (f0 - fm2);
        return (gp - gm) / (4 * hh * hh);
    };
    // One Richardson step; the stencil error is O(h^2) so the combination
    // (4 A_{h/2} - A_h)/3 cancels the leading term.  Every evaluation point
    // of both stencils lies in [t-2h, t+2h], covered by the check above.
    const double a_h = stencil(h);
    const double a_h2 = stencil(h / 2);
    return (4 * a_h2 - a_h) / 3;
}

} // namespace seamlab
