#include "seamlab/theta_kernels.hpp"

#include <cmath>

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

// S(u) = sum_{n>=1} e^{-pi n^2 u}.  Every caller inverts first so that
// u >= 1 here; then the remainder after stopping at n is bounded by the
// next term over 1 - e^{-3 pi u} < next * 1.0001, and we budget a plain
// factor 2 to stay honest about the polynomial prefactors other series
// variants carry.
double theta_sum(double u, const TruncationPolicy& pol, int* terms_used = nullptr,
                 double* tail_bound = nullptr) {
    double sum = 0.0;
    for (int n = 1; n <= pol.n_max; ++n) {
        const double e = -PI * n * n * u;
        const double term = (e < -745.0) ? 0.0 : std::exp(e);
        sum += term;
        const double en = -PI * (n + 1) * (n + 1) * u;
        const double bound = (en < -745.0) ? 0.0 : 2.0 * std::exp(en);
        if (bound < pol.tail_tol) {
            if (terms_used) *terms_used = n;
            if (tail_bound) *tail_bound = bound;
            return sum;
        }
    }
    throw DomainError("theta series: n_max reached before tail_tol");
}

} // namespace

double theta_series_sum(double u, const TruncationPolicy& pol) {
    if (!(u > 0.0)) throw DomainError("theta_series_sum: u must be positive");
    return theta_sum(u, pol);
}

SelfDualScale::SelfDualScale(double diffusion) : D(diffusion) {
    if (!(diffusion > 0.0))
        throw DomainError("SelfDualScale: diffusion must be positive");
    L = std::sqrt(4.0 * PI * diffusion);
}

double theta_jacobi(double u, const TruncationPolicy& pol) {
    if (!(u > 0.0)) throw DomainError("theta_jacobi: u must be positive");
    if (u >= 1.0) return 1.0 + 2.0 * theta_sum(u, pol);
    return (1.0 + 2.0 * theta_sum(1.0 / u, pol)) / std::sqrt(u);
}

KernelSample theta_jacobi_sample(double u, const TruncationPolicy& pol) {
    if (!(u > 0.0)) throw DomainError("theta_jacobi: u must be positive");
    KernelSample out;
    out.t = u;
    if (u >= 1.0) {
        out.value = 1.0 + 2.0 * theta_sum(u, pol, &out.terms_used, &out.tail_bound);
    } else {
        const double inv = std::sqrt(1.0 / u);
        out.value =
            inv * (1.0 + 2.0 * theta_sum(1.0 / u, pol, &out.terms_used, &out.tail_bound));
        out.tail_bound *= inv;
    }
    return out;
}

double trace_kernel_KL(double t, const SelfDualScale& scale,
                       const TruncationPolicy& pol) {
    if (!(t > 0.0)) throw DomainError("trace_kernel_KL: t must be positive");
    // Exponent rate 4 pi^2 D / L^2 as written; pi exactly at the self-dual
    // scale up to the rounding in L = sqrt(4 pi D).
    const double rate = 4.0 * PI * PI * scale.D / (scale.L * scale.L);
    const double u = rate * t / PI;
    if (u >= 1.0) return 1.0 + 2.0 * theta_sum(u, pol);
    return (1.0 + 2.0 * theta_sum(1.0 / u, pol)) / std::sqrt(u);
}

double theta_completed(double t, const TruncationPolicy& pol) {
    if (!(t > 0.0)) throw DomainError("theta_completed: t must be positive");
    double sum = 0.0;
    if (t >= 1.0) {
        const double rt = std::sqrt(t);
        for (int n = 1; n <= pol.n_max; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = -PI * n2 * t;
            if (e >= -745.0)
                sum += (2.0 * PI * PI * n2 * n2 * t * rt - 3.0 * PI * n2 * rt) *
                       std::exp(e);
            const double m2 = static_cast<double>(n + 1) * (n + 1);
            const double en = -PI * m2 * t;
            const double bound =
                (en < -745.0)
                    ? 0.0
                    : 2.0 * (2.0 * PI * PI * m2 * m2 * t * rt + 3.0 * PI * m2 * rt) *
                          std::exp(en);
            if (bound < pol.tail_tol) return sum;
        }
    } else {
        // A applied termwise to the inverted series; exponential arguments
        // are -pi n^2 / t, so the small-t side is as tame as the large-t one.
        const double v = 1.0 / t;
        for (int n = 1; n <= pol.n_max; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = -PI * n2 * v;
            if (e >= -745.0)
                sum += (2.0 * PI * PI * n2 * n2 * v * v * v - 3.0 * PI * n2 * v * v) *
                       std::exp(e);
            const double m2 = static_cast<double>(n + 1) * (n + 1);
            const double en = -PI * m2 * v;
            const double bound =
                (en < -745.0)
                    ? 0.0
                    : 2.0 *
                          (2.0 * PI * PI * m2 * m2 * v * v * v + 3.0 * PI * m2 * v * v) *
                          std::exp(en);
            if (bound < pol.tail_tol) return sum;
        }
    }
    throw DomainError("theta_completed: n_max reached before tail_tol");
}

double theta_completed_deriv(double t, const TruncationPolicy& pol) {
    if (!(t > 0.0)) throw DomainError("theta_completed_deriv: t must be positive");
    double sum = 0.0;
    if (t >= 1.0) {
        const double rt = std::sqrt(t);
        for (int n = 1; n <= pol.n_max; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = -PI * n2 * t;
            if (e >= -745.0)
                sum += (6.0 * PI * PI * n2 * n2 * rt - 1.5 * PI * n2 / rt -
                        2.0 * PI * PI * PI * n2 * n2 * n2 * t * rt) *
                       std::exp(e);
            const double m2 = static_cast<double>(n + 1) * (n + 1);
            const double en = -PI * m2 * t;
            const double bound =
                (en < -745.0)
                    ? 0.0
                    : 2.0 *
                          (6.0 * PI * PI * m2 * m2 * rt + 1.5 * PI * m2 / rt +
                           2.0 * PI * PI * PI * m2 * m2 * m2 * t * rt) *
                          std::exp(en);
            if (bound < pol.tail_tol) return sum;
        }
    } else {
        // d/dt of the inverted-series terms, v = 1/t, dv/dt = -v^2:
        //   -v^2 (9 pi^2 n^4 v^2 - 6 pi n^2 v - 2 pi^3 n^6 v^3) e^{-pi n^2 v}
        const double v = 1.0 / t;
        for (int n = 1; n <= pol.n_max; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = -PI * n2 * v;
            if (e >= -745.0)
                sum += -v * v *
                       (9.0 * PI * PI * n2 * n2 * v * v - 6.0 * PI * n2 * v -
                        2.0 * PI * PI * PI * n2 * n2 * n2 * v * v * v) *
                       std::exp(e);
            const double m2 = static_cast<double>(n + 1) * (n + 1);
            const double en = -PI * m2 * v;
            const double bound =
                (en < -745.0)
                    ? 0.0
                    : 2.0 * v * v *
                          (9.0 * PI * PI * m2 * m2 * v * v + 6.0 * PI * m2 * v +
                           2.0 * PI * PI * PI * m2 * m2 * m2 * v * v * v) *
                          std::exp(en);
            if (bound < pol.tail_tol) return sum;
        }
    }
    throw DomainError("theta_completed_deriv: n_max reached before tail_tol");
}

CenteredKernels centered_kernels(double t, const TruncationPolicy& pol) {
    if (!(t > 0.0)) throw DomainError("centered_kernels: t must be positive");
    CenteredKernels out;
    const double rt = std::sqrt(t);
    if (t >= 1.0) {
        out.Ktilde = 1.0 + 2.0 * theta_sum(t, pol) - 1.0 / rt;
    } else {
        // K(t) - t^{-1/2} via the inversion: the two t^{-1/2} pieces cancel
        // exactly, leaving 2 t^{-1/2} S(1/t).
        out.Ktilde = 2.0 * theta_sum(1.0 / t, pol) / rt;
    }
    out.Ktilde_star = out.Ktilde - 1.0;
    out.Ktilde_sym = out.Ktilde / rt;
    out.Ktilde_star_sym = out.Ktilde_star / rt;
    return out;
}

double phi_star(double x, const TruncationPolicy& pol) {
    if (x >= 0.0) {
        // Phi*(x) = 2 e^{-x/4} S(e^x) - e^{-3x/4}; the series is gone below
        // double precision once pi e^x > 745.
        const double S = (x > 700.0) ? 0.0 : theta_sum(std::exp(x), pol);
        return 2.0 * std::exp(-0.25 * x) * S - std::exp(-0.75 * x);
    }
    // Inverted representation: Phi*(x) = 2 e^{-3x/4} S(e^{-x}) - e^{-x/4}.
    const double S = (-x > 700.0) ? 0.0 : theta_sum(std::exp(-x), pol);
    return 2.0 * std::exp(-0.75 * x) * S - std::exp(-0.25 * x);
}

double twist_residual(double x, double beta, const TruncationPolicy& pol) {
    if (!(x > 0.0)) throw DomainError("twist_residual: x must be positive");
    return phi_star(-x, pol) - std::exp(beta * x) * phi_star(x, pol);
}

double f_theta(double y, const TruncationPolicy& pol) {
    if (!(y >= 0.0)) throw DomainError("f_theta: y must be >= 0");
    const double S = (y > 700.0) ? 0.0 : theta_sum(std::exp(y), pol);
    return 2.0 * std::exp(-0.5 * y) * S;
}

double f_theta_deriv(double y, const TruncationPolicy& pol) {
    if (!(y >= 0.0)) throw DomainError("f_theta_deriv: y must be >= 0");
    if (y > 700.0) return 0.0;
    const double u = std::exp(y);
    double sum = 0.0;
    for (int n = 1; n <= pol.n_max; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const double e = -0.5 * y - PI * n2 * u;
        if (e >= -745.0) sum += 2.0 * std::exp(e) * (-0.5 - PI * n2 * u);
        const double m2 = static_cast<double>(n + 1) * (n + 1);
        const double en = -0.5 * y - PI * m2 * u;
        const double bound =
            (en < -745.0) ? 0.0 : 4.0 * std::exp(en) * (0.5 + PI * m2 * u);
        if (bound < pol.tail_tol) return sum;
    }
    throw DomainError("f_theta_deriv: n_max reached before tail_tol");
}

GaussianSumBound gaussian_sum_bound_check(int alpha,
                                          const std::vector<double>& grid,
                                          const TruncationPolicy& pol) {
    if (alpha < 0) throw DomainError("gaussian_sum_bound_check: alpha must be >= 0");
    if (grid.empty()) throw DomainError("gaussian_sum_bound_check: empty grid");
    GaussianSumBound out;
    for (double t : grid) {
        if (!(t > 0.0))
            throw DomainError("gaussian_sum_bound_check: grid points must be > 0");
        double sum = 0.0;
        bool done = false;
        for (int n = 1; n <= pol.n_max && !done; ++n) {
            const double e = -PI * static_cast<double>(n) * n * t;
            if (e >= -745.0) sum += std::pow(n, alpha) * std::exp(e);
            const double en = -PI * static_cast<double>(n + 1) * (n + 1) * t;
            const double bound =
                (en < -745.0) ? 0.0 : 2.0 * std::pow(n + 1, alpha) * std::exp(en);
            done = bound < pol.tail_tol;
        }
        if (!done)
            throw DomainError("gaussian_sum_bound_check: n_max reached before tail_tol");
        if (t <= 1.0)
            out.sup_small_t =
                std::max(out.sup_small_t, sum * std::pow(t, 0.5 * (alpha + 1)));
        if (t >= 1.0) out.sup_large_t = std::max(out.sup_large_t, sum);
    }
    return out;
}

} // namespace seamlab
