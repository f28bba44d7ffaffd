#include "seamlab/quadrature.hpp"

#include <cmath>
#include <vector>

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

const std::array<double, 12> kGlNodes = {
    -0.9815606342467192, -0.9041172563704749, -0.7699026741943047,
    -0.5873179542866175, -0.3678314989981802, -0.1252334085114689,
    0.1252334085114689,  0.3678314989981802,  0.5873179542866175,
    0.7699026741943047,  0.9041172563704749,  0.9815606342467192};

const std::array<double, 12> kGlWeights = {
    0.04717533638651183, 0.10693932599531843, 0.16007832854334622,
    0.20316742672306592, 0.23349253653835481, 0.24914704581340277,
    0.24914704581340277, 0.23349253653835481, 0.20316742672306592,
    0.16007832854334622, 0.10693932599531843, 0.04717533638651183};

// Shared refinement ladder: run eval(level) for level = 0, 1, ... until two
// consecutive values agree to target_tol.  eval must double its node density
// per level and report how many nodes it spent.
TransformResult refine_ladder(const QuadratureSpec& spec,
                              const std::function<cplx(int, long&)>& eval) {
    TransformResult out;
    long nodes = 0;
    cplx prev = eval(0, nodes);
    out.nodes_used = nodes;
    out.value = prev;
    out.est_error = std::abs(prev); // meaningless until one refinement ran
    for (int level = 1; level <= spec.refinement_limit; ++level) {
        long n = 0;
        const cplx cur = eval(level, n);
        out.nodes_used += n;
        out.est_error = std::abs(cur - prev);
        out.value = cur;
        if (out.est_error <= spec.target_tol) {
            out.converged = true;
            return out;
        }
        prev = cur;
    }
    out.converged = false;
    return out;
}

} // namespace

void validate(const QuadratureSpec& spec) {
    if (spec.node_count < 16)
        throw ConfigError("QuadratureSpec: node_count must be >= 16");
    if (!(spec.target_tol > 0.0))
        throw ConfigError("QuadratureSpec: target_tol must be > 0");
    if (spec.refinement_limit < 0)
        throw ConfigError("QuadratureSpec: refinement_limit must be >= 0");
}

const std::array<double, 12>& gl12_nodes() { return kGlNodes; }
const std::array<double, 12>& gl12_weights() { return kGlWeights; }

cplx gl12_panels(const std::function<cplx(double)>& g, double a, double b,
                 long n_panels) {
    if (n_panels < 1) n_panels = 1;
    const double h = (b - a) / static_cast<double>(n_panels);
    cplx total = 0.0;
    for (long p = 0; p < n_panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double hw = 0.5 * h;
        cplx acc = 0.0;
        for (int i = 0; i < 12; ++i)
            acc += kGlWeights[i] * g(mid + hw * kGlNodes[i]);
        total += acc * hw;
    }
    return total;
}

TransformResult trapezoid_refine(const std::function<cplx(double)>& g,
                                 double a, double b,
                                 const QuadratureSpec& spec) {
    validate(spec);
    return refine_ladder(spec, [&](int level, long& nodes) {
        const long n = static_cast<long>(spec.node_count) << level;
        const double h = (b - a) / static_cast<double>(n);
        cplx sum = 0.5 * (g(a) + g(b));
        for (long k = 1; k < n; ++k) sum += g(a + k * h);
        nodes = n + 1;
        return sum * h;
    });
}

TransformResult de_halfline(const std::function<cplx(double)>& g,
                            const QuadratureSpec& spec) {
    // x = exp((pi/2) sinh v).  |v| <= 6.5 keeps the exponent below 523, so
    // x itself never overflows; integrands are expected to have decayed to
    // nothing well inside that range.
    auto wrapped = [&](double v) -> cplx {
        const double t = 0.5 * PI * std::sinh(v);
        const double x = std::exp(t);
        const double jac = x * 0.5 * PI * std::cosh(v);
        return g(x) * jac;
    };
    return trapezoid_refine(wrapped, -6.5, 6.5, spec);
}

TransformResult de_real_line(const std::function<cplx(double)>& g,
                             const QuadratureSpec& spec) {
    // x = sinh((pi/2) sinh v); |v| <= 2.23 caps |x| near 690 -- far enough
    // out that anything integrable against this rule has gone below 1e-15,
    // while every factor a typical integrand multiplies stays in double
    // range at the extreme nodes.
    auto wrapped = [&](double v) -> cplx {
        const double t = 0.5 * PI * std::sinh(v);
        const double x = std::sinh(t);
        const double jac = 0.5 * PI * std::cosh(v) * std::cosh(t);
        return g(x) * jac;
    };
    return trapezoid_refine(wrapped, -2.23, 2.23, spec);
}

TransformResult fourier_halfline(const std::function<double(double)>& f,
                                 cplx w, double y_max,
                                 const QuadratureSpec& spec, double seg_cap) {
    validate(spec);
    if (!(y_max > 0.0)) throw DomainError("fourier_halfline: y_max must be > 0");
    if (!(seg_cap > 0.0)) throw DomainError("fourier_halfline: seg_cap must be > 0");

    const double freq = std::abs(w.real());
    const double period = freq > 0.0 ? 2.0 * PI / freq : y_max;
    const long n_periods =
        std::max<long>(1, static_cast<long>(std::ceil(y_max / period)));
    // Panels per period: one per period is already phase-locked; extra
    // panels when the period is longer than seg_cap, plus whatever it takes
    // to honor the requested coarsest node count.
    long base_panels =
        std::max<long>(1, static_cast<long>(std::ceil(std::min(period, y_max) /
                                                      seg_cap)));
    while (12 * n_periods * base_panels < spec.node_count) base_panels *= 2;

    auto g = [&](double y) -> cplx {
        return f(y) * std::exp(cplx(0.0, -1.0) * w * y);
    };

    bool accelerated = false;
    double tail_est = 0.0;

    auto eval = [&](int level, long& nodes) -> cplx {
        const long panels = base_panels << level;
        std::vector<cplx> cumulative;
        cumulative.reserve(n_periods);
        cplx sum = 0.0;
        cplx last_piece = 0.0;
        for (long k = 0; k < n_periods; ++k) {
            const double a = k * period;
            const double b = std::min((k + 1) * period, y_max);
            if (b <= a) break;
            last_piece = gl12_panels(g, a, b, panels);
            sum += last_piece;
            cumulative.push_back(sum);
            nodes += 12 * panels;
        }
        // Truncation care: if the final period still contributes, the plain
        // sum is missing a live tail.  The per-period sequence of a decaying
        // envelope is close to geometric, which iterated Aitken collapses.
        accelerated = false;
        tail_est = 0.0;
        const std::size_t m = cumulative.size();
        if (m >= 4 && std::abs(last_piece) > 1e-3 * spec.target_tol) {
            const std::size_t depth = std::min<std::size_t>(7, m);
            std::vector<cplx> row(cumulative.end() - depth, cumulative.end());
            cplx prev_diag = row.back();
            while (row.size() >= 3) {
                std::vector<cplx> next;
                for (std::size_t i = 0; i + 2 < row.size(); ++i) {
                    const cplx d1 = row[i + 1] - row[i];
                    const cplx d2 = row[i + 2] - row[i + 1];
                    const cplx den = d2 - d1;
                    if (std::abs(den) < 1e-300) {
                        next.push_back(row[i + 2]);
                    } else {
                        next.push_back(row[i + 2] - d2 * d2 / den);
                    }
                }
                prev_diag = row.back();
                row = std::move(next);
            }
            accelerated = true;
            tail_est = std::abs(row.back() - prev_diag);
            return row.back();
        }
        return sum;
    };

    TransformResult out = refine_ladder(spec, eval);
    if (accelerated) {
        out.est_error += tail_est;
        out.converged = out.est_error <= spec.target_tol;
    }
    return out;
}

} // namespace seamlab
