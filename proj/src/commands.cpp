#include "seamlab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "seamlab/cycle_spectral.hpp"
#include "seamlab/special_functions.hpp"
#include "seamlab/strip_scan.hpp"
#include "seamlab/theta_kernels.hpp"
#include "seamlab/transforms.hpp"

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = lo * std::exp(r * i);
    return g;
}

// Plain one-sided theta summation 1 + 2 sum e^{-pi n^2 u}, summed directly
// at every u (slowly for small u).  This is deliberately NOT theta_jacobi:
// the library inverts below u = 1, so inversion checks against the library
// would compare an expression with itself.  Direct summation is the
// independent route.
double theta_direct(double u) {
    double sum = 1.0;
    for (int n = 1; n <= 256; ++n) {
        const double term = std::exp(-PI * n * n * u);
        sum += 2.0 * term;
        if (term < 1e-20) break;
    }
    return sum;
}

// The Theta-series branch theta_completed does NOT use at this t: direct
// series below the switch, inverted series above it.  Summing the opposite
// branch independently makes the dual-representation comparison cross the
// Poisson pair instead of reshuffling one sum.
double theta_opposite_branch(double t) {
    double sum = 0.0;
    if (t < 1.0) {
        const double rt = std::sqrt(t);
        for (int n = 1; n <= 256; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = std::exp(-PI * n2 * t);
            if (e == 0.0) break;
            const double term =
                (2.0 * PI * PI * n2 * n2 * t * rt - 3.0 * PI * n2 * rt) * e;
            sum += term;
            if (std::abs(term) < 1e-22 && n > 2) break;
        }
    } else {
        const double v = 1.0 / t;
        for (int n = 1; n <= 256; ++n) {
            const double n2 = static_cast<double>(n) * n;
            const double e = std::exp(-PI * n2 * v);
            if (e == 0.0) break;
            const double term =
                (2.0 * PI * PI * n2 * n2 * v * v * v - 3.0 * PI * n2 * v * v) * e;
            sum += term;
            if (std::abs(term) < 1e-22 && n > 2) break;
        }
    }
    return sum;
}

using Filler = std::function<void(Record&)>;

// Run one record body; numeric errors become outcome = fail with the error
// text, never an aborted envelope.  Wall time is suppressed under the
// determinism flag so identical configs give byte-identical reports.
void add_record(ReportEnvelope& env, bool deterministic,
                const std::string& name, const Filler& fill) {
    Record rec;
    rec.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fill(rec);
    } catch (const std::exception& e) {
        rec.outcome = Outcome::Fail;
        rec.values["error"] = e.what();
    }
    if (!deterministic) {
        const std::chrono::duration<double> dt =
            std::chrono::steady_clock::now() - t0;
        rec.wall_time_s = dt.count();
    }
    env.records.push_back(std::move(rec));
}

void set_pass(Record& rec, bool ok) {
    rec.outcome = ok ? Outcome::Pass : Outcome::Fail;
}

// ---- verify-identities ------------------------------------------------

void cmd_verify(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;
    const QuadratureSpec quad = c.quad;
    const TruncationPolicy pol = c.series;

    add_record(env, det, "mellin-xi-identification", [&](Record& rec) {
        const std::vector<double> zs = {0.0, 0.5, 1.0, 2.0, 5.0};
        rec.inputs["z"] = zs;
        rec.inputs["rel_tol"] = 1e-8;
        double worst = 0.0, worst_z = 0.0;
        double est = 0.0;
        ordered_json per = ordered_json::array();
        for (double z : zs) {
            const TransformResult f = F_arch(cplx(z, 0.0), quad);
            const cplx xi = Xi(cplx(2.0 * z, 0.0));
            const double rel = std::abs(f.value - xi) / std::abs(xi);
            per.push_back(ordered_json{{"z", z},
                                       {"F_arch", json_complex(f.value)},
                                       {"Xi", json_complex(xi)},
                                       {"rel_error", rel}});
            est = std::max(est, f.est_error);
            if (rel > worst) {
                worst = rel;
                worst_z = z;
            }
        }
        rec.values["per_z"] = per;
        rec.values["max_rel_error"] = worst;
        rec.values["worst_z"] = worst_z;
        rec.est_error = est;
        set_pass(rec, worst < 1e-8);
    });

    add_record(env, det, "mellin-xi-near-zero", [&](Record& rec) {
        const double z = 7.0673627;
        rec.inputs["z"] = z;
        rec.inputs["abs_tol"] = 1e-6;
        const TransformResult f = F_arch(cplx(z, 0.0), quad);
        rec.values["abs_F_arch"] = std::abs(f.value);
        rec.est_error = f.est_error;
        set_pass(rec, std::abs(f.value) < 1e-6);
    });

    add_record(env, det, "jacobi-inversion", [&](Record& rec) {
        const auto grid = log_grid(0.05, 20.0, c.verify_grid_points);
        rec.inputs["grid"] = ordered_json{
            {"lo", 0.05}, {"hi", 20.0}, {"points", c.verify_grid_points}};
        rec.inputs["tol"] = 1e-12;
        double worst = 0.0, lib_dev = 0.0;
        for (double u : grid) {
            const double lhs = theta_direct(u);
            const double rhs = theta_direct(1.0 / u) / std::sqrt(u);
            worst = std::max(worst, std::abs(lhs - rhs));
            lib_dev = std::max(lib_dev, std::abs(theta_jacobi(u, pol) - lhs));
        }
        rec.values["max_residual"] = worst;
        rec.values["max_library_dev"] = lib_dev;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-12 && lib_dev < 1e-12);
    });

    add_record(env, det, "selfdual-inversion", [&](Record& rec) {
        const auto grid = log_grid(0.05, 20.0, c.verify_grid_points);
        rec.inputs["tol"] = 1e-12;
        const SelfDualScale scale(1.0);
        rec.inputs["L"] = scale.L;
        double worst = 0.0;
        for (double t : grid) {
            // Mixed routes: library trace kernel on one side, independent
            // direct summation (at the inverted argument) on the other.
            const double lhs = trace_kernel_KL(t, scale, pol);
            const double rhs = theta_direct(1.0 / t) / std::sqrt(t);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        rec.values["max_residual"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-12);
    });

    add_record(env, det, "theta-dual-representations", [&](Record& rec) {
        const auto grid = log_grid(0.3, 3.0, c.verify_grid_points);
        rec.inputs["grid"] =
            ordered_json{{"lo", 0.3}, {"hi", 3.0}, {"points", c.verify_grid_points}};
        rec.inputs["tol"] = 1e-12;
        double worst = 0.0;
        for (double t : grid)
            worst = std::max(worst, std::abs(theta_completed(t, pol) -
                                             theta_opposite_branch(t)));
        rec.values["max_disagreement"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-12);
    });

    add_record(env, det, "theta-rapid-decay", [&](Record& rec) {
        const int A = 5;
        rec.inputs["A"] = A;
        rec.inputs["bound"] = 64.0;
        double sup_small = 0.0, sup_large = 0.0;
        for (double t : log_grid(0.01, 1.0, c.verify_grid_points))
            sup_small = std::max(sup_small, std::abs(theta_completed(t, pol)) *
                                                std::pow(t, -A));
        for (double t : log_grid(1.0, 50.0, c.verify_grid_points))
            sup_large = std::max(sup_large, std::abs(theta_completed(t, pol)) *
                                                std::pow(t, A));
        rec.values["sup_small_t"] = sup_small;
        rec.values["sup_large_t"] = sup_large;
        set_pass(rec, sup_small < 64.0 && sup_large < 64.0);
    });

    add_record(env, det, "gaussian-sum-bounds", [&](Record& rec) {
        rec.inputs["alpha"] = std::vector<int>{2, 4};
        const auto grid = log_grid(0.05, 20.0, c.verify_grid_points);
        ordered_json per = ordered_json::array();
        bool ok = true;
        for (int alpha : {2, 4}) {
            const GaussianSumBound b = gaussian_sum_bound_check(alpha, grid, pol);
            per.push_back(ordered_json{{"alpha", alpha},
                                       {"sup_small_t", b.sup_small_t},
                                       {"sup_large_t", b.sup_large_t}});
            ok = ok && b.sup_small_t < 1e3 && b.sup_large_t < 1e3;
        }
        rec.values["bounds"] = per;
        set_pass(rec, ok);
    });

    add_record(env, det, "mellin-A-smooth", [&](Record& rec) {
        auto f = [](double t) { return std::exp(-t - 1.0 / t); };
        const std::vector<cplx> ss = {cplx(0.75, 0.0), cplx(0.75, 1.0),
                                      cplx(2.0, 0.0)};
        rec.inputs["f"] = "exp(-t - 1/t)";
        rec.inputs["tol"] = 1e-8;
        ordered_json per = ordered_json::array();
        double worst = 0.0;
        for (cplx s : ss) {
            const double r = mellin_A_identity_residual(f, s, quad);
            per.push_back(
                ordered_json{{"s", json_complex(s)}, {"residual", r}});
            worst = std::max(worst, r);
        }
        rec.values["per_s"] = per;
        rec.values["max_residual"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-8);
    });

    add_record(env, det, "mellin-A-bilateral-z0", [&](Record& rec) {
        // Mellin-A identity routed through the bilateral Laplace transform:
        // at s = 3/4 the right-hand side collapses to -(1/16) B_Phi*(-1/2)
        // after t = e^x, and the left-hand side is Xi(0).  Two fully
        // independent evaluation pipelines.
        rec.inputs["tol"] = 1e-10;
        auto phi = [&](double x) { return phi_star(x, pol); };
        const BilateralResult b = bilateral_laplace(phi, cplx(-0.5, 0.0), quad);
        const cplx xi0 = Xi(cplx(0.0, 0.0));
        const double resid = std::abs(xi0 + b.result.value / 16.0);
        rec.values["Xi_0"] = json_complex(xi0);
        rec.values["bilateral_at_minus_half"] = json_complex(b.result.value);
        rec.values["residual"] = resid;
        rec.est_error = b.result.est_error / 16.0;
        set_pass(rec, resid < 1e-10);
    });

    add_record(env, det, "boundary-term-monitor", [&](Record& rec) {
        rec.inputs["epsilon"] = 1e-3;
        rec.inputs["R"] = 50.0;
        rec.inputs["s"] = json_complex(cplx(0.75, 0.0));
        rec.inputs["tol"] = 1e-12;
        auto theta = [&](double t) { return theta_completed(t, pol); };
        const BoundaryTermRecord m =
            boundary_term_monitor(theta, cplx(0.75, 0.0), 1e-3, 50.0);
        rec.values["at_zero"] = m.at_zero;
        rec.values["at_infinity"] = m.at_infinity;
        rec.values["f_eps"] = m.f_eps;
        rec.values["df_eps"] = m.df_eps;
        rec.values["f_R"] = m.f_R;
        rec.values["df_R"] = m.df_R;
        set_pass(rec, m.at_zero < 1e-12 && m.at_infinity < 1e-12);
    });

    add_record(env, det, "bilateral-strip", [&](Record& rec) {
        // The measured convergence strip of the Phi* bilateral transform;
        // the kernel's pure-exponential tails make the scan exact.
        auto phi = [&](double x) { return phi_star(x, pol); };
        const BilateralResult b = bilateral_laplace(phi, cplx(-0.5, 0.0), quad);
        rec.values["sigma_min"] = b.measured_strip.sigma_min;
        rec.values["sigma_max"] = b.measured_strip.sigma_max;
        rec.est_error = b.result.est_error;
        set_pass(rec, std::abs(b.measured_strip.sigma_min + 0.75) < 1e-12 &&
                          std::abs(b.measured_strip.sigma_max + 0.25) < 1e-12);
    });

    add_record(env, det, "twist-exponent", [&](Record& rec) {
        // Empirical reflection exponent beta(x) = log(Phi*(-x)/Phi*(x))/x,
        // measured from values; the criterion is constancy in x.
        const auto grid = log_grid(0.5, 3.0, c.verify_grid_points);
        rec.inputs["x"] = ordered_json{{"lo", 0.5}, {"hi", 3.0}};
        rec.inputs["constancy_tol"] = 1e-6;
        double lo = 1e300, hi = -1e300;
        for (double x : grid) {
            const double beta =
                std::log(phi_star(-x, pol) / phi_star(x, pol)) / x;
            lo = std::min(lo, beta);
            hi = std::max(hi, beta);
        }
        rec.values["beta_min"] = lo;
        rec.values["beta_max"] = hi;
        rec.values["spread"] = hi - lo;
        set_pass(rec, hi - lo < 1e-6 && std::abs(hi - 1.0) < 1e-6);
    });

    // The left-boundary identity residuals are not small at desk scale: the
    // identity holds only up to a normalization this toolkit measures rather
    // than derives.  They are reported as diagnostics -- the acceptance
    // property is their stability, checked further down.
    for (int zi = 0; zi <= 2; ++zi) {
        add_record(env, det, "lb-identity-z" + std::to_string(zi),
                   [&, zi](Record& rec) {
                       const double z = static_cast<double>(zi);
                       rec.inputs["z"] = z;
                       const LBIdentityRecord r = lb_identity_residual(z, quad);
                       rec.values["lhs_Xi_2z"] = json_complex(r.lhs);
                       rec.values["rhs"] = json_complex(r.rhs);
                       rec.values["residual"] = r.residual;
                       rec.outcome = Outcome::Diagnostic;
                   });
    }

    add_record(env, det, "bridge-consistency", [&](Record& rec) {
        // The bridge form X = U F re-parameterizes the left-boundary
        // identity (w = 2z); the two residuals travel through different
        // code paths (xi_completed vs Xi, conjugate Laplace argument) and
        // must agree.
        rec.inputs["z"] = 1.0;
        rec.inputs["tol"] = 1e-10;
        const double via_bridge = bridge_residual(cplx(2.0, 0.0), quad);
        const double via_lb = lb_identity_residual(1.0, quad).residual;
        rec.values["bridge_residual"] = via_bridge;
        rec.values["lb_residual"] = via_lb;
        rec.values["difference"] = std::abs(via_bridge - via_lb);
        set_pass(rec, std::abs(via_bridge - via_lb) < 1e-10);
    });

    add_record(env, det, "rl-uniform-decay", [&](Record& rec) {
        // Riemann-Lebesgue defect must shrink with |Re w| uniformly across
        // the admissible horizontal strip.
        rec.inputs["re_w"] = std::vector<double>{25.0, 50.0, 100.0};
        rec.inputs["im_w"] = std::vector<double>{-0.4, 0.0, 0.4};
        auto f = [&](double y) { return f_theta(y, pol); };
        auto fp = [&](double y) { return f_theta_deriv(y, pol); };
        std::vector<cplx> ws;
        for (double im : {-0.4, 0.0, 0.4})
            for (double re : {25.0, 50.0, 100.0}) ws.push_back(cplx(re, im));
        const RLReport rl = strip_RL_check(f, fp, ws, quad);
        ordered_json per = ordered_json::array();
        bool ok = true;
        for (double im : {-0.4, 0.0, 0.4}) {
            double d25 = 0.0, d100 = 0.0;
            for (const RLEntry& e : rl.entries) {
                if (std::abs(e.w.imag() - im) > 1e-12) continue;
                if (std::abs(e.w.real() - 25.0) < 1e-12) d25 = e.defect;
                if (std::abs(e.w.real() - 100.0) < 1e-12) d100 = e.defect;
            }
            per.push_back(ordered_json{
                {"im_w", im}, {"defect_25", d25}, {"defect_100", d100}});
            ok = ok && d100 < d25;
        }
        for (const RLEntry& e : rl.entries)
            ok = ok && std::abs(e.defect - e.ibp_crosscheck) <
                           1e-6 * std::max(1.0, e.defect);
        rec.values["rows"] = per;
        set_pass(rec, ok);
    });

    add_record(env, det, "seam-stability", [&](Record& rec) {
        // Criterion: lb residuals and the twist exponent are stable to ~3
        // significant digits under node doubling and series tightening x10.
        rec.inputs["rel_tol"] = 1e-3;
        QuadratureSpec fine = quad;
        fine.node_count *= 2;
        TruncationPolicy tight = pol;
        tight.tail_tol *= 0.1;
        bool ok = true;
        ordered_json per = ordered_json::array();
        for (int zi = 0; zi <= 2; ++zi) {
            const double a =
                lb_identity_residual(static_cast<double>(zi), quad).residual;
            const double b =
                lb_identity_residual(static_cast<double>(zi), fine).residual;
            const double drift = std::abs(a - b) / std::max(std::abs(a), 1e-30);
            per.push_back(ordered_json{
                {"z", zi}, {"residual", a}, {"refined", b}, {"rel_drift", drift}});
            ok = ok && drift < 1e-3;
        }
        double beta_a = 0.0, beta_b = 0.0;
        {
            const double x = 1.5;
            beta_a = std::log(phi_star(-x, pol) / phi_star(x, pol)) / x;
            beta_b = std::log(phi_star(-x, tight) / phi_star(x, tight)) / x;
            ok = ok && std::abs(beta_a - beta_b) < 1e-9;
        }
        rec.values["lb"] = per;
        rec.values["beta"] = beta_a;
        rec.values["beta_tightened"] = beta_b;
        set_pass(rec, ok);
    });
}

// ---- kernel-table -------------------------------------------------------

void cmd_kernel_table(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;
    const TruncationPolicy pol = c.series;
    const auto grid = log_grid(c.kernel_t_lo, c.kernel_t_hi, c.kernel_points);

    add_record(env, det, "kernel-grid", [&](Record& rec) {
        rec.inputs["t_lo"] = c.kernel_t_lo;
        rec.inputs["t_hi"] = c.kernel_t_hi;
        rec.inputs["points"] = c.kernel_points;
        GridExport g;
        g.name = "kernel_table";
        g.axes.push_back({"t", grid});
        const SelfDualScale scale(1.0);
        GridColumn theta{"theta", false, {}};
        GridColumn kl{"K_L", false, {}};
        GridColumn kst{"Ktilde_star", false, {}};
        GridColumn big{"Theta", false, {}};
        GridColumn phi{"phi_star_at_log_t", false, {}};
        for (double t : grid) {
            theta.values.push_back(theta_jacobi(t, pol));
            kl.values.push_back(trace_kernel_KL(t, scale, pol));
            kst.values.push_back(centered_kernels(t, pol).Ktilde_star);
            big.values.push_back(theta_completed(t, pol));
            phi.values.push_back(phi_star(std::log(t), pol));
        }
        g.columns = {theta, kl, kst, big, phi};
        out.grids.push_back(std::move(g));
        rec.values["rows"] = grid.size();
        rec.outcome = Outcome::Diagnostic;
    });

    add_record(env, det, "jacobi-inversion-grid", [&](Record& rec) {
        rec.inputs["tol"] = 1e-12;
        double worst = 0.0;
        for (double u : grid) {
            const double lhs = theta_direct(u);
            const double rhs = theta_direct(1.0 / u) / std::sqrt(u);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        rec.values["max_residual"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-12);
    });

    add_record(env, det, "trace-kernel-consistency", [&](Record& rec) {
        // At the self-dual scale the cycle trace kernel is the Jacobi theta
        // value itself; the two evaluators share no code path.
        rec.inputs["tol"] = 1e-13;
        const SelfDualScale scale(1.0);
        double worst = 0.0;
        for (double t : grid)
            worst = std::max(worst, std::abs(trace_kernel_KL(t, scale, pol) -
                                             theta_jacobi(t, pol)));
        rec.values["max_disagreement"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-13);
    });
}

// ---- ulclt ----------------------------------------------------------------

void cmd_ulclt(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;
    const double t = c.ulclt_t;
    const double L = 2.0 * std::sqrt(PI); // self-dual scale for D = 1

    add_record(env, det, "heat-kernel-stochasticity", [&](Record& rec) {
        rec.inputs["tol"] = 1e-13;
        double worst = 0.0;
        for (int N : c.ulclt_sizes) {
            const CycleModel model(N, 1.0);
            const double s = N / L;
            double sum = 0.0;
            for (int j = 0; j < N; ++j) sum += heat_kernel(model, s * s * t, j);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
        rec.values["max_deviation"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-13);
    });

    add_record(env, det, "poisson-crosscheck", [&](Record& rec) {
        rec.inputs["tol"] = 1e-13;
        double worst = 0.0;
        for (int N : c.ulclt_sizes) {
            const CycleModel model(N, 1.0);
            const double s = N / L;
            for (double scale_t : {0.5, 1.0, 2.0}) {
                const double tau = s * s * t * scale_t;
                for (long j : {0L, 1L, static_cast<long>(N / 2)}) {
                    const double a = wrapped_gaussian(model, tau, j, 8);
                    const double b = wrapped_gaussian_fourier(model, tau, j);
                    worst = std::max(worst, std::abs(a - b));
                }
            }
        }
        rec.values["max_disagreement"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-13);
    });

    add_record(env, det, "ulclt-rate", [&](Record& rec) {
        rec.inputs["t"] = t;
        rec.inputs["sizes"] = c.ulclt_sizes;
        rec.inputs["spread_bound"] = 3.0;
        ordered_json per = ordered_json::array();
        double lo = 1e300, hi = 0.0;
        std::vector<cplx> sup_n(c.ulclt_sizes.size());
        for (std::size_t i = 0; i < c.ulclt_sizes.size(); ++i) {
            const int N = c.ulclt_sizes[i];
            const UlcltRecord r = ulclt_report(CycleModel(N, 1.0), t,
                                               c.ulclt_window_lo,
                                               c.ulclt_window_hi);
            const double scaled = r.sup_error * N;
            per.push_back(ordered_json{{"N", N},
                                       {"sup_error", r.sup_error},
                                       {"sup_times_N", scaled},
                                       {"argmax_j", r.argmax_j},
                                       {"t_in_window", r.t_in_window}});
            sup_n[i] = cplx(r.sup_error, 0.0);
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        rec.values["per_N"] = per;
        rec.values["spread_factor"] = hi / lo;
        set_pass(rec, hi / lo <= 3.0);

        GridExport g;
        g.name = "ulclt_table";
        std::vector<double> axis;
        for (int N : c.ulclt_sizes) axis.push_back(static_cast<double>(N));
        g.axes.push_back({"N", axis});
        GridColumn sup{"sup_error", false, sup_n};
        GridColumn scaled{"sup_times_N", false, {}};
        GridColumn resid{"scaling_residual", false, {}};
        for (std::size_t i = 0; i < axis.size(); ++i) {
            scaled.values.push_back(sup_n[i] * axis[i]);
            resid.values.push_back(
                cplx(scaling_limit_residual(c.ulclt_sizes[i], t, L), 0.0));
        }
        g.columns = {sup, scaled, resid};
        out.grids.push_back(std::move(g));
    });

    add_record(env, det, "scaling-limit-rate", [&](Record& rec) {
        // Trace convergence to K_L at t = ulclt.t: the residual must fall
        // monotonically in N and its empirical rate exponent must land in
        // [-1.5, -0.5].  The measured exponent is -2 (the quartic dispersion
        // correction of the cycle eigenvalues); the monotone part holds, the
        // band does not, and this record reports that without adjustment.
        rec.inputs["t"] = t;
        rec.inputs["rate_band"] = std::vector<double>{-1.5, -0.5};
        std::vector<int> sizes;
        for (int N : c.ulclt_sizes)
            if (N >= 64) sizes.push_back(N);
        if (sizes.size() < 2) sizes = c.ulclt_sizes;
        rec.inputs["sizes"] = sizes;
        ordered_json per = ordered_json::array();
        std::vector<double> lr, ln;
        bool monotone = true;
        double prev = 1e300;
        for (int N : sizes) {
            const double r = scaling_limit_residual(N, t, L);
            per.push_back(ordered_json{{"N", N}, {"residual", r}});
            monotone = monotone && r < prev;
            prev = r;
            lr.push_back(std::log(r));
            ln.push_back(std::log(static_cast<double>(N)));
        }
        // Least-squares slope of log residual vs log N.
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < ln.size(); ++i) {
            mx += ln[i];
            my += lr[i];
        }
        mx /= static_cast<double>(ln.size());
        my /= static_cast<double>(ln.size());
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < ln.size(); ++i) {
            num += (ln[i] - mx) * (lr[i] - my);
            den += (ln[i] - mx) * (ln[i] - mx);
        }
        const double slope = num / den;
        rec.values["per_N"] = per;
        rec.values["monotone_decreasing"] = monotone;
        rec.values["rate_exponent"] = slope;
        rec.values["rate_in_band"] = (slope >= -1.5 && slope <= -0.5);
        set_pass(rec, monotone && slope >= -1.5 && slope <= -0.5);
    });
}

// ---- zeros ------------------------------------------------------------

void cmd_zeros(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;

    add_record(env, det, "zero-ordinates", [&](Record& rec) {
        rec.inputs["z_max"] = c.zeros_z_max;
        rec.inputs["tol"] = c.zeros_tol;
        const ZeroList zl = locate_real_zeros(c.zeros_z_max, c.zeros_tol);
        rec.values["count"] = zl.ordinates.size();
        rec.values["ordinates"] = zl.ordinates;
        rec.values["bracket_width"] = zl.bracket_width;
        rec.est_error = zl.bracket_width;
        set_pass(rec, zl.bracket_width <= c.zeros_tol);

        GridExport g;
        g.name = "zeros";
        std::vector<double> idx;
        GridColumn gamma{"gamma", false, {}};
        for (std::size_t i = 0; i < zl.ordinates.size(); ++i) {
            idx.push_back(static_cast<double>(i + 1));
            gamma.values.push_back(cplx(zl.ordinates[i], 0.0));
        }
        if (idx.empty()) { // an empty CSV is worse than a one-row sentinel
            idx.push_back(0.0);
            gamma.values.push_back(cplx(0.0, 0.0));
        }
        g.axes.push_back({"index", idx});
        g.columns = {gamma};
        out.grids.push_back(std::move(g));
    });

    add_record(env, det, "xi-at-zeros", [&](Record& rec) {
        rec.inputs["tol"] = 1e-9;
        const ZeroList zl = locate_real_zeros(c.zeros_z_max, c.zeros_tol);
        double worst = 0.0;
        for (double g : zl.ordinates)
            worst = std::max(worst, std::abs(Xi(cplx(g, 0.0))));
        rec.values["max_abs_Xi"] = worst;
        rec.est_error = worst;
        set_pass(rec, worst < 1e-9);
    });
}

// ---- scan-rectangle ------------------------------------------------------

void cmd_scan(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;

    GridExport summary;
    summary.name = "scan_summary";
    std::vector<double> idx;
    GridColumn colT{"T", false, {}}, colN{"N", false, {}},
        colSup{"sup_diff", false, {}}, colInf{"inf_ref", false, {}},
        colHolds{"holds", false, {}}, colWX{"winding_X", false, {}},
        colPZ{"pn_zeros_in_T", false, {}}, colTh{"theta_max", false, {}};

    for (std::size_t i = 0; i < c.scan_schedule.size(); ++i) {
        const double T = c.scan_schedule[i].first;
        const int N = c.scan_schedule[i].second;
        const StripRectangle rect(T, c.scan_eta);
        const std::string tag = std::to_string(i);

        double sup = 0.0, inf = 0.0, th = 0.0;
        int wind = 0, pz = 0;
        bool holds = false;

        add_record(env, det, "separation-" + tag, [&](Record& rec) {
            rec.inputs["T"] = T;
            rec.inputs["N"] = N;
            rec.inputs["eta"] = c.scan_eta;
            rec.inputs["samples"] = c.scan_samples;
            const SeparationReport r =
                separation_scan(rect, N, bridge_unit, c.scan_samples);
            sup = r.sup_diff;
            inf = r.inf_ref;
            holds = r.holds;
            rec.values["sup_diff"] = r.sup_diff;
            rec.values["inf_ref"] = r.inf_ref;
            rec.values["holds"] = r.holds;
            rec.values["windings_checked"] = r.windings_checked;
            if (r.windings_checked) {
                rec.values["winding_X"] = r.winding_X;
                rec.values["winding_ref"] = r.winding_ref;
            }
            // The separation inequality is an open question at desk scale: the
            // scan measures it, never asserts it.  The only failure mode is
            // internal inconsistency (Rouche granted but windings disagree).
            if (r.windings_checked && r.winding_X != r.winding_ref)
                rec.outcome = Outcome::Fail;
            else
                rec.outcome = Outcome::Diagnostic;
        });

        add_record(env, det, "zero-divisor-" + tag, [&](Record& rec) {
            rec.inputs["T"] = T;
            rec.inputs["N"] = N;
            const ZeroDivisorRecord r = zero_divisor_compare(rect, N);
            wind = r.winding_X;
            pz = r.real_zeros_PN_in_T;
            rec.values["winding_X"] = r.winding_X;
            rec.values["real_zeros_PN_in_T"] = r.real_zeros_PN_in_T;
            rec.values["match"] = r.match;
            rec.outcome = Outcome::Diagnostic; // match=false is a finding
        });

        add_record(env, det, "sector-" + tag, [&](Record& rec) {
            rec.inputs["T"] = T;
            rec.inputs["N"] = N;
            rec.inputs["theta"] = c.scan_theta;
            const SectorReport r = sector_scan(rect, N, bridge_unit,
                                               c.scan_theta);
            th = r.theta_max;
            rec.values["theta_max"] = r.theta_max;
            rec.values["within_theta"] = (r.theta_max <= c.scan_theta);
            rec.values["contains_zero_on_boundary"] =
                r.contains_zero_on_boundary;
            rec.outcome = Outcome::Diagnostic; // sector bound: measured only
        });

        idx.push_back(static_cast<double>(i));
        colT.values.push_back(cplx(T, 0.0));
        colN.values.push_back(cplx(static_cast<double>(N), 0.0));
        colSup.values.push_back(cplx(sup, 0.0));
        colInf.values.push_back(cplx(inf, 0.0));
        colHolds.values.push_back(cplx(holds ? 1.0 : 0.0, 0.0));
        colWX.values.push_back(cplx(static_cast<double>(wind), 0.0));
        colPZ.values.push_back(cplx(static_cast<double>(pz), 0.0));
        colTh.values.push_back(cplx(th, 0.0));
    }

    summary.axes.push_back({"entry", idx});
    summary.columns = {colT, colN, colSup, colInf, colHolds, colWX, colPZ, colTh};
    out.grids.push_back(std::move(summary));
}

// ---- seam-report -----------------------------------------------------

void cmd_seam(const RunConfig& c, RunOutput& out) {
    ReportEnvelope& env = out.envelope;
    const bool det = c.deterministic;

    add_record(env, det, "seam-boundary", [&](Record& rec) {
        rec.inputs["T"] = c.seam_T;
        rec.inputs["eta"] = c.scan_eta;
        rec.inputs["N"] = c.seam_N;
        const StripRectangle rect(c.seam_T, c.scan_eta);
        const BoundaryPath path = seam_boundary_trace(rect, c.seam_N,
                                                      bridge_unit);
        double theta_max = 0.0;
        for (const BoundarySample& s : path.samples)
            theta_max = std::max(theta_max, std::abs(s.arg_accum));
        const WindingReport wr = winding_number(path);
        rec.values["samples"] = path.samples.size();
        rec.values["indentations"] = path.indentations.size();
        rec.values["max_step"] = path.max_step;
        rec.values["theta_max"] = theta_max;
        rec.values["winding"] = wr.winding;
        rec.values["total_arg_change"] = wr.total_arg_change;
        rec.outcome = Outcome::Diagnostic;

        GridExport g;
        g.name = "seam_boundary";
        std::vector<double> sidx;
        GridColumn re{"re_w", false, {}}, im{"im_w", false, {}},
            lm{"log_mag", false, {}}, arg{"arg_accum", false, {}};
        for (std::size_t k = 0; k < path.samples.size(); ++k) {
            const BoundarySample& s = path.samples[k];
            sidx.push_back(static_cast<double>(k));
            re.values.push_back(cplx(s.w.real(), 0.0));
            im.values.push_back(cplx(s.w.imag(), 0.0));
            lm.values.push_back(cplx(s.log_mag, 0.0));
            arg.values.push_back(cplx(s.arg_accum, 0.0));
        }
        g.axes.push_back({"sample", sidx});
        g.columns = {re, im, lm, arg};
        out.grids.push_back(std::move(g));
    });

    add_record(env, det, "seam-path-valid", [&](Record& rec) {
        // The path guarantees of the tracer, checked from the outside.
        const StripRectangle rect(c.seam_T, c.scan_eta);
        const BoundaryPath path = seam_boundary_trace(rect, c.seam_N,
                                                      bridge_unit);
        const bool closed =
            path.samples.front().w == path.samples.back().w;
        rec.values["closed"] = closed;
        rec.values["max_step"] = path.max_step;
        set_pass(rec, closed && path.max_step < PI / 2.0);
    });
}

} // namespace

RunOutput run(const RunConfig& config) {
    RunOutput out;
    out.envelope.command = command_name(config.command);
    out.envelope.config = config_echo(config);
    switch (config.command) {
    case Command::VerifyIdentities: cmd_verify(config, out); break;
    case Command::KernelTable: cmd_kernel_table(config, out); break;
    case Command::Ulclt: cmd_ulclt(config, out); break;
    case Command::Zeros: cmd_zeros(config, out); break;
    case Command::ScanRectangle: cmd_scan(config, out); break;
    case Command::SeamReport: cmd_seam(config, out); break;
    }
    return out;
}

} // namespace seamlab
