#include "seamlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "seamlab/parallel.hpp"
#include "seamlab/special_functions.hpp"
#include "seamlab/theta_kernels.hpp"

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

// Tightened series policy for integrands built from theta sums.  The
// quadrature targets sit at 1e-10..1e-12; the series under the integral has
// to be comfortably below that after multiplication by exponential weights
// up to ~e^{3.2}.
const TruncationPolicy kSeriesPol{1e-18, 128};

// Log-substituted Mellin integrand g(y) = f(e^y) e^{s y}.  Evaluating f
// first and short-circuiting on exact zeros keeps the exp factor from
// manufacturing inf*0 at the far double-exponential nodes.
cplx mellin_integrand(const std::function<double(double)>& f, cplx s, double y) {
    if (y > 690.0 || y < -690.0) return {};
    const double ft = f(std::exp(y));
    if (ft == 0.0) return {};
    return ft * std::exp(s * y);
}

// Sample the log-substituted integrand outward at y = +-(5, 10, 20, 40);
// a magnitude chain that keeps growing away from the origin and ends well
// above the central scale means the Mellin integral diverges at this s.
void mellin_divergence_scan(const std::function<double(double)>& f, cplx s) {
    double scale = 1e-300;
    for (double y : {-2.0, -1.0, 0.0, 1.0, 2.0})
        scale = std::max(scale, std::abs(mellin_integrand(f, s, y)));
    for (double sign : {1.0, -1.0}) {
        const double a10 = std::abs(mellin_integrand(f, s, sign * 10.0));
        const double a20 = std::abs(mellin_integrand(f, s, sign * 20.0));
        const double a40 = std::abs(mellin_integrand(f, s, sign * 40.0));
        if (a40 > a20 && a20 > a10 && a40 > 10.0 * scale)
            throw DivergentTailError(
                "mellin_halfline: integrand grows towards t = " +
                std::string(sign > 0 ? "inf" : "0") +
                "; transform diverges at this s");
    }
}

// Grow a window [lo, hi] outward from the seed until |g| at both edges has
// dropped below 1e-18 of the largest magnitude seen.  Used by the fixed
// window rules; the double-exponential rules bring their own clustering.
void expand_window(const std::function<cplx(double)>& g, double& lo, double& hi,
                   double cap) {
    double scale = 1e-300;
    for (double y : {lo, 0.5 * lo, 0.0, 0.5 * hi, hi})
        scale = std::max(scale, std::abs(g(y)));
    const double step = 2.0;
    while (std::abs(g(lo)) > 1e-18 * scale && lo > -cap) {
        lo -= step;
        scale = std::max(scale, std::abs(g(lo)));
    }
    while (std::abs(g(hi)) > 1e-18 * scale && hi < cap) {
        hi += step;
        scale = std::max(scale, std::abs(g(hi)));
    }
    lo -= step; // pad one extra step so the endpoint values are pure noise
    hi += step;
}

// One half-line Laplace piece of the left-boundary transform:
//   piece(c) = integral_0^inf Phi*(x) e^{c x} dx,   Re c < 3/4.
// The integrand is assembled in fused form
//   Phi*(x) e^{cx} = -e^{(c-3/4)x} + 2 S(e^x) e^{(c-1/4)x}
// so neither factor is ever materialised alone (bare Phi* underflows while
// the weight overflows, and vice versa).  Beyond x = 6.4 the series term is
// zero to all bits and the remaining pure exponential integrates in closed
// form, which is what lets the quadrature window stay short no matter how
// close Re c gets to 3/4.
TransformResult laplace_piece(cplx c, const QuadratureSpec& spec) {
    const double XCUT = 6.4;
    auto integrand = [c](double x) -> cplx {
        cplx val = -std::exp((c - 0.75) * x);
        const double series = theta_series_sum(std::exp(x), kSeriesPol);
        if (series != 0.0) val += 2.0 * series * std::exp((c - 0.25) * x);
        return val;
    };
    // Closed-form tail of the -e^{(c-3/4)x} term past the cut.
    const cplx tail = std::exp((c - 0.75) * XCUT) / (c - 0.75);

    // Panel length resolves the oscillation e^{i Im(c) x}; at least a few
    // panels per period, never longer than 0.4.
    double seg = 0.4;
    if (std::abs(c.imag()) > 0.0)
        seg = std::min(seg, PI / std::abs(c.imag()));
    long panels = static_cast<long>(std::ceil(XCUT / seg));
    while (12 * panels < spec.node_count) panels *= 2;

    TransformResult out;
    cplx prev = gl12_panels(integrand, 0.0, XCUT, panels) + tail;
    out.value = prev;
    out.est_error = std::abs(prev);
    out.nodes_used = 12 * panels;
    for (int level = 1; level <= spec.refinement_limit; ++level) {
        const long n = panels << level;
        const cplx cur = gl12_panels(integrand, 0.0, XCUT, n) + tail;
        out.nodes_used += 12 * n;
        out.est_error = std::abs(cur - prev);
        out.value = cur;
        prev = cur;
        if (out.est_error <= spec.target_tol) {
            out.converged = true;
            break;
        }
    }
    return out;
}

// Slope of log|f| between two sample points; the conservative (largest)
// of the two segment slopes bounds the exponential growth rate seen by the
// scan.  Exact zeros read as -inf, i.e. "no growth at all on this side".
double growth_rate(double m_near, double m_mid, double m_far) {
    const double inf = std::numeric_limits<double>::infinity();
    if (m_far == 0.0) return -inf;
    const double lf = std::log(m_far);
    const double s2 = (m_mid == 0.0) ? -inf : (lf - std::log(m_mid)) / 20.0;
    const double s1 = (m_mid == 0.0 || m_near == 0.0)
                          ? s2
                          : (std::log(m_mid) - std::log(m_near)) / 10.0;
    return std::max(s1, s2);
}

} // namespace

TransformResult mellin_halfline(const std::function<double(double)>& f, cplx s,
                                const QuadratureSpec& spec) {
    validate(spec);
    mellin_divergence_scan(f, s);

    TransformResult r;
    switch (spec.transform) {
    case VariableTransform::DoubleExponentialHalfline: {
        // Integrate in t directly: f(t) t^{s-1}, the dt/dt' jacobian lives
        // in the rule.  Same zero short-circuit as the log form.
        auto h = [&](double t) -> cplx {
            const double ft = f(t);
            if (ft == 0.0) return {};
            return ft * std::exp((s - 1.0) * std::log(t));
        };
        r = de_halfline(h, spec);
        break;
    }
    case VariableTransform::DoubleExponentialRealLine: {
        auto g = [&](double y) { return mellin_integrand(f, s, y); };
        r = de_real_line(g, spec);
        break;
    }
    case VariableTransform::LogSubstitution: {
        auto g = [&](double y) { return mellin_integrand(f, s, y); };
        double lo = -4.0, hi = 4.0;
        expand_window(g, lo, hi, 600.0);
        r = trapezoid_refine(g, lo, hi, spec);
        break;
    }
    }
    if (!std::isfinite(std::abs(r.value)))
        throw NonConvergentError("mellin_halfline: integrand produced a"
                                 " non-finite value inside the window");
    if (!r.converged)
        throw NonConvergentError("mellin_halfline: refinement limit reached"
                                 " before the tail stabilised");
    return r;
}

TransformResult F_arch(cplx z, const QuadratureSpec& spec) {
    const TruncationPolicy pol{1e-16, 64};
    auto theta = [pol](double t) { return theta_completed(t, pol); };
    return mellin_halfline(theta, cplx(0.75, 0.0) + cplx(0.0, 1.0) * z, spec);
}

double mellin_A_identity_residual(const std::function<double(double)>& f, cplx s,
                                  const QuadratureSpec& spec) {
    // Numeric route for the left side.  The stencil step is relative so the
    // five evaluation points stay inside (0, inf) at every node; where f has
    // already underflowed to zero across the whole stencil the operator is
    // zero too, skipping the t^{3/2} factor that would overflow on its own.
    auto Af = [&](double t) -> double {
        const double h = 0.005 * t;
        if (f(t) == 0.0 && f(t - 2 * h) == 0.0 && f(t + 2 * h) == 0.0)
            return 0.0;
        return arch_completion_apply(f, t, h);
    };
    const TransformResult lhs = mellin_halfline(Af, s, spec);
    const TransformResult rhs = mellin_halfline(f, s - 0.5, spec);
    const cplx factor = (s - 1.0) * (s - 0.5);
    return std::abs(lhs.value - factor * rhs.value);
}

BilateralResult bilateral_laplace(const std::function<double(double)>& f, cplx s,
                                  const QuadratureSpec& spec) {
    validate(spec);

    // Measure the exponential rates of |f| on both sides.  The integral
    // converges iff  rate_plus < Re s < -rate_minus  (strict), which is the
    // strip we report and enforce.
    const double rp = growth_rate(std::abs(f(10.0)), std::abs(f(20.0)),
                                  std::abs(f(40.0)));
    const double rm = growth_rate(std::abs(f(-10.0)), std::abs(f(-20.0)),
                                  std::abs(f(-40.0)));
    StripSpec strip;
    strip.sigma_min = rp;
    strip.sigma_max = -rm;
    strip.axis = StripAxis::RealPart;

    const double sr = s.real();
    if (!(sr > strip.sigma_min && sr < strip.sigma_max))
        throw OutsideStripError(
            "bilateral_laplace: Re s outside the measured convergence strip",
            strip);

    auto g = [&](double x) -> cplx {
        const double fx = f(x);
        if (fx == 0.0) return {};
        // Guard the weight: when f is alive but tiny at a far node, build
        // the product in log magnitude rather than letting exp overflow.
        const double rex = -sr * x;
        if (rex > 700.0) {
            const double lm = std::log(std::abs(fx)) + rex;
            if (lm < -745.0) return {};
            const cplx phase = std::exp(cplx(0.0, -s.imag() * x));
            return std::copysign(1.0, fx) * std::exp(lm) * phase;
        }
        return fx * std::exp(-s * x);
    };

    BilateralResult out;
    out.measured_strip = strip;

    if (spec.transform == VariableTransform::DoubleExponentialHalfline ||
        spec.transform == VariableTransform::DoubleExponentialRealLine) {
        out.result = de_real_line(g, spec);
        return out;
    }

    // Fixed-window trapezoid (the default): x is already the log-scale
    // variable here, so LogSubstitution means "integrate as-is".  The window
    // grows until both edges are noise; whatever survives at the edges is
    // integrated exponentially outward at the strip margin rate and added to
    // the error estimate, so a thin margin shows up as an honest fat bound
    // instead of a silently truncated tail.
    const double margin =
        std::min(sr - strip.sigma_min, strip.sigma_max - sr);
    double lo = -16.0, hi = 16.0;
    expand_window(g, lo, hi, 690.0);
    out.result = trapezoid_refine(g, lo, hi, spec);
    const double trunc = (std::abs(g(lo)) + std::abs(g(hi))) /
                         std::max(std::min(margin, 1.0), 0.05);
    out.result.est_error += trunc;
    out.result.converged = out.result.est_error <= spec.target_tol;
    return out;
}

TransformResult B_LB(cplx s, const QuadratureSpec& spec) {
    validate(spec);
    if (!(s.real() > -0.75 && s.real() < 1.25))
        throw DomainError("B_LB: Re s must lie in (-3/4, 5/4)");
    // The two half-line pieces; under s -> 1/2 - s they swap places, and
    // since each is computed by the identical code path the reflection
    // symmetry of the sum holds bit for bit.
    const TransformResult a = laplace_piece(-s, spec);
    const TransformResult b = laplace_piece(s - 0.5, spec);
    TransformResult out;
    out.value = a.value + b.value;
    out.est_error = a.est_error + b.est_error;
    out.nodes_used = a.nodes_used + b.nodes_used;
    out.converged = a.converged && b.converged;
    if (!out.converged)
        throw NonConvergentError("B_LB: refinement limit reached before the"
                                 " panel ladder stabilised");
    return out;
}

TransformResult boundary_formula(double z, const QuadratureSpec& spec) {
    return B_LB(cplx(-0.5, z), spec);
}

LBIdentityRecord lb_identity_residual(double z, const QuadratureSpec& spec) {
    LBIdentityRecord rec;
    rec.lhs = Xi(cplx(2.0 * z, 0.0));
    const TransformResult b = boundary_formula(z, spec);
    rec.rhs = 2.0 * PI * (z * z + 1.0 / 16.0) * b.value;
    rec.residual = std::abs(rec.lhs - rec.rhs);
    return rec;
}

double bridge_residual(cplx w, const QuadratureSpec& spec) {
    if (!(std::abs(w.imag()) < 0.5))
        throw DomainError("bridge_residual: w must satisfy |Im w| < 1/2");
    const cplx i(0.0, 1.0);
    const cplx X = xi_completed(cplx(0.5, 0.0) - i * w);
    const cplx U = PI * (4.0 * w * w + 1.0) / 8.0;
    const cplx F = B_LB(cplx(-0.5, 0.0) - i * w / 2.0, spec).value;
    return std::abs(X - U * F);
}

BoundaryTermRecord boundary_term_monitor(const std::function<double(double)>& f,
                                         cplx s, double epsilon, double R) {
    if (!(epsilon > 0.0) || !(epsilon < R))
        throw DomainError("boundary_term_monitor: need 0 < epsilon < R");
    // Central difference with one Richardson step, relative stepsize; only
    // the magnitude enters the record so modest cancellation is fine.
    auto deriv = [&](double t) {
        const double h = 1e-3 * t;
        auto cd = [&](double hh) { return (f(t + hh) - f(t - hh)) / (2 * hh); };
        return (4.0 * cd(h / 2) - cd(h)) / 3.0;
    };
    const double sr = s.real(); // |t^s| = t^{Re s}
    BoundaryTermRecord rec;
    rec.f_eps = std::abs(f(epsilon)) * std::pow(epsilon, sr);
    rec.df_eps = std::abs(deriv(epsilon)) * std::pow(epsilon, sr + 1.0);
    rec.f_R = std::abs(f(R)) * std::pow(R, sr);
    rec.df_R = std::abs(deriv(R)) * std::pow(R, sr + 1.0);
    rec.at_zero = std::max(rec.f_eps, rec.df_eps);
    rec.at_infinity = std::max(rec.f_R, rec.df_R);
    return rec;
}

RLReport strip_RL_check(const std::function<double(double)>& f,
                        const std::function<double(double)>& fprime,
                        const std::vector<cplx>& w_list,
                        const QuadratureSpec& spec) {
    validate(spec);
    const double f0 = f(0.0);
    const double scale = std::max(std::abs(f0), 1e-12);

    // Find where the envelope has genuinely died; the oscillatory rule then
    // never wanders into pure-noise territory.
    double y_max = 8.0;
    while (std::abs(f(y_max)) > 1e-18 * scale) {
        y_max *= 2.0;
        if (y_max > 70000.0)
            throw DivergentTailError("strip_RL_check: |f| has not decayed by"
                                     " y = 65536; the half-line integral does"
                                     " not converge");
    }

    RLReport rep;
    rep.entries.resize(w_list.size());
    // The frequencies are independent -- this is the intended parallel axis.
    // Each slot is written exactly once; no reduction.
    parallel_for(w_list.size(), [&](std::size_t idx) {
        const cplx w = w_list[idx];
        RLEntry e;
        e.w = w;
        const TransformResult I = fourier_halfline(f, w, y_max, spec);
        e.I = I.value;
        e.defect = std::abs(cplx(0.0, 1.0) * w * I.value - f0);
        // Independent route: after integration by parts the same defect is
        // |integral f' e^{-iwy} dy|, computed from its own quadrature.
        const TransformResult J = fourier_halfline(fprime, w, y_max, spec);
        e.ibp_crosscheck = std::abs(J.value);
        rep.entries[idx] = e;
    });

    std::stable_sort(rep.entries.begin(), rep.entries.end(),
                     [](const RLEntry& a, const RLEntry& b) {
                         return std::abs(a.w.real()) < std::abs(b.w.real());
                     });
    return rep;
}

} // namespace seamlab
