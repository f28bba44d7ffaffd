#include "seamlab/strip_scan.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "seamlab/cycle_spectral.hpp"
#include "seamlab/parallel.hpp"
#include "seamlab/special_functions.hpp"

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double TWO_PI = 2.0 * PI;

// Internal defaults for the scan entry points that do not expose the
// indentation knobs.  The zero threshold is far below the boundary floor of
// |Xi(2w)| on desk-size rectangles (~1e-6 at T = 8) but far above roundoff,
// so only genuine zeros trigger a detour.  Thresholds travel in log form
// throughout: the seam ratio needs thresholds around e^{-200}, which do not
// exist as plain doubles.
constexpr double kScanLogTol = -20.723265836946411; // log(1e-9)
constexpr double kScanIndent = 1e-3;

// One boundary piece: a straight segment or a circular arc.  Arc endpoints
// are stored explicitly so that consecutive pieces join bitwise even when
// cos/sin of the sweep angles carry roundoff.
struct Piece {
    bool arc = false;
    cplx a{}, b{};
    cplx center{};
    double radius = 0.0;
    double phi0 = 0.0, phi1 = 0.0;

    double length() const {
        return arc ? radius * std::abs(phi1 - phi0) : std::abs(b - a);
    }
    cplx at(double u) const {
        if (u == 0.0) return a;
        if (u == 1.0) return b;
        if (!arc) return a + u * (b - a);
        const double phi = phi0 + u * (phi1 - phi0);
        return center + radius * cplx(std::cos(phi), std::sin(phi));
    }
};

struct EdgeZero {
    int edge = 0;
    double u = 0.0; // position along the edge in [0, 1]
    cplx point{};
};

std::array<cplx, 4> rect_corners(const StripRectangle& rect) {
    return {cplx(-rect.T, -rect.eta), cplx(rect.T, -rect.eta),
            cplx(rect.T, rect.eta), cplx(-rect.T, rect.eta)};
}

// Scan the plain outline for dips of |f| below zero_tol.  Sampling density
// is tied to the indent radius (a detour-worthy zero cannot hide between
// samples closer than its own detour); each run of below-threshold samples
// is collapsed to the location of its magnitude minimum by ternary search.
std::vector<EdgeZero> detect_boundary_zeros(const LogEvaluator& f,
                                            const std::array<cplx, 4>& corner,
                                            double log_tol,
                                            double indent_radius) {
    std::vector<EdgeZero> zeros;
    for (int e = 0; e < 4; ++e) {
        const cplx a = corner[static_cast<std::size_t>(e)];
        const cplx b = corner[static_cast<std::size_t>((e + 1) % 4)];
        const double len = std::abs(b - a);
        long n = static_cast<long>(std::ceil(len / indent_radius));
        n = std::min<long>(std::max<long>(n, 256), 8192);
        std::vector<double> lm(static_cast<std::size_t>(n) + 1);
        parallel_for(lm.size(), [&](std::size_t i) {
            const double u = static_cast<double>(i) / static_cast<double>(n);
            lm[i] = f(a + u * (b - a)).log_mag;
        });
        for (long i = 0; i <= n;) {
            if (!(lm[static_cast<std::size_t>(i)] < log_tol)) {
                ++i;
                continue;
            }
            long j = i;
            while (j + 1 <= n && lm[static_cast<std::size_t>(j + 1)] < log_tol)
                ++j;
            double ulo = static_cast<double>(std::max<long>(i - 1, 0)) / n;
            double uhi = static_cast<double>(std::min<long>(j + 1, n)) / n;
            auto mag = [&](double u) { return f(a + u * (b - a)).log_mag; };
            for (int it = 0; it < 200 && (uhi - ulo) * len > 1e-13; ++it) {
                const double u1 = ulo + (uhi - ulo) / 3.0;
                const double u2 = uhi - (uhi - ulo) / 3.0;
                if (mag(u1) < mag(u2))
                    uhi = u2;
                else
                    ulo = u1;
            }
            const double um = 0.5 * (ulo + uhi);
            zeros.push_back({e, um, a + um * (b - a)});
            i = j + 1;
        }
    }
    return zeros;
}

// Assemble the counterclockwise piece list, detouring every detected zero on
// an interior semicircle (quarter circle at a corner).  Interior is to the
// left of the walk, so the bulge direction is the left normal i*t.
std::vector<Piece> build_pieces(const std::array<cplx, 4>& corner,
                                const std::vector<EdgeZero>& zeros,
                                double r, std::vector<Indentation>& indents) {
    std::array<cplx, 4> tangent;
    for (int e = 0; e < 4; ++e) {
        const cplx d = corner[static_cast<std::size_t>((e + 1) % 4)] -
                       corner[static_cast<std::size_t>(e)];
        tangent[static_cast<std::size_t>(e)] = d / std::abs(d);
    }

    // Split the raw list into per-edge interior zeros and corner hits.
    std::array<bool, 4> at_corner{};
    std::array<std::vector<EdgeZero>, 4> on_edge;
    for (const EdgeZero& z : zeros) {
        double best = 1e300;
        int bc = 0;
        for (int c = 0; c < 4; ++c) {
            const double d = std::abs(z.point - corner[static_cast<std::size_t>(c)]);
            if (d < best) {
                best = d;
                bc = c;
            }
        }
        if (best <= 0.5 * r) {
            at_corner[static_cast<std::size_t>(bc)] = true;
        } else if (best < 2.0 * r) {
            throw IndentationOverlapError(
                "trace_boundary: boundary zero sits within an indent radius of"
                " a corner; the semicircular detour would cross the adjacent"
                " edge");
        } else {
            on_edge[static_cast<std::size_t>(z.edge)].push_back(z);
        }
    }

    // Pairwise clearance.  Two detours that touch or cross cannot both stay
    // on the contour.
    std::vector<cplx> centers;
    for (int c = 0; c < 4; ++c)
        if (at_corner[static_cast<std::size_t>(c)])
            centers.push_back(corner[static_cast<std::size_t>(c)]);
    for (const auto& ez : on_edge)
        for (const EdgeZero& z : ez) centers.push_back(z.point);
    for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (std::abs(centers[i] - centers[j]) < 2.0 * r)
                throw IndentationOverlapError(
                    "trace_boundary: near-zeros cluster tighter than twice the"
                    " indent radius");
    if (!centers.empty()) {
        const double half_min = std::min(std::abs(corner[1].real()),
                                         std::abs(corner[1].imag()));
        if (r >= half_min)
            throw IndentationOverlapError(
                "trace_boundary: indent radius does not fit inside the"
                " rectangle");
        for (const cplx& c : centers) indents.push_back({c, r});
    }

    std::vector<Piece> pieces;
    auto push_straight = [&](cplx a, cplx b) {
        if (std::abs(b - a) < 1e-15) return;
        Piece p;
        p.a = a;
        p.b = b;
        pieces.push_back(p);
    };
    auto push_arc = [&](cplx a, cplx b, cplx center, double phi0, double phi1) {
        Piece p;
        p.arc = true;
        p.a = a;
        p.b = b;
        p.center = center;
        p.radius = r;
        p.phi0 = phi0;
        p.phi1 = phi1;
        pieces.push_back(p);
    };

    for (int e = 0; e < 4; ++e) {
        const cplx t = tangent[static_cast<std::size_t>(e)];
        const cplx q0 = corner[static_cast<std::size_t>(e)];
        const cplx q1 = corner[static_cast<std::size_t>((e + 1) % 4)];
        cplx cur = at_corner[static_cast<std::size_t>(e)] ? q0 + r * t : q0;

        std::vector<EdgeZero> ez = on_edge[static_cast<std::size_t>(e)];
        std::sort(ez.begin(), ez.end(),
                  [](const EdgeZero& x, const EdgeZero& y) { return x.u < y.u; });
        for (const EdgeZero& z : ez) {
            const cplx in = z.point - r * t;
            const cplx out = z.point + r * t;
            push_straight(cur, in);
            // Semicircle from -t around the zero to +t, bulging towards the
            // left normal (the interior): phi runs arg(-t) -> arg(-t) - pi.
            const double phi0 = std::arg(-t);
            push_arc(in, out, z.point, phi0, phi0 - PI);
            cur = out;
        }

        const bool corner_next = at_corner[static_cast<std::size_t>((e + 1) % 4)];
        push_straight(cur, corner_next ? q1 - r * t : q1);
        if (corner_next) {
            // Quarter circle across the corner: from -t of this edge to +t of
            // the next, a -pi/2 sweep whose midpoint points into the interior
            // diagonal.
            const cplx t2 = tangent[static_cast<std::size_t>((e + 1) % 4)];
            const double phi0 = std::arg(-t);
            push_arc(q1 - r * t, q1 + r * t2, q1, phi0, phi0 - PI / 2.0);
        }
    }
    return pieces;
}

struct Node {
    int piece = 0;
    double u = 0.0;
    cplx w{};
    LogComplex f{};
};

BoundaryPath trace_core(const LogEvaluator& f, const StripRectangle& rect,
                        double log_zero_tol, double indent_radius,
                        long base_samples) {
    if (!(indent_radius > 0.0))
        throw DomainError("trace_boundary: indent_radius must be positive");

    const auto corner = rect_corners(rect);
    const auto zeros =
        detect_boundary_zeros(f, corner, log_zero_tol, indent_radius);

    BoundaryPath path;
    const auto pieces = build_pieces(corner, zeros, indent_radius,
                                     path.indentations);

    double perimeter = 0.0;
    for (const Piece& p : pieces) perimeter += p.length();
    const double delta = perimeter / static_cast<double>(std::max<long>(base_samples, 16));

    // Initial parameter grid: arcs always get enough points that a simple
    // zero behind the detour (arg swing ~pi across the semicircle) is
    // resolved without refinement.
    std::vector<Node> nodes;
    nodes.push_back({0, 0.0, pieces.front().at(0.0), {}});
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const Piece& p = pieces[pi];
        long n = static_cast<long>(std::ceil(p.length() / delta));
        n = std::max<long>(n, p.arc ? 24 : 2);
        for (long j = 1; j <= n; ++j) {
            const double u = static_cast<double>(j) / static_cast<double>(n);
            nodes.push_back({static_cast<int>(pi), u, p.at(u), {}});
        }
    }
    parallel_for(nodes.size(),
                 [&](std::size_t i) { nodes[i].f = f(nodes[i].w); });

    auto check_sample = [](const Node& nd) {
        if (nd.f.is_zero())
            throw NonRectifiableError(
                "trace_boundary: sample hit an exact zero on the path (below"
                " zero_tol scale)");
        if (std::isnan(nd.f.log_mag) || !std::isfinite(nd.f.arg))
            throw NonRectifiableError(
                "trace_boundary: non-finite evaluation on the path");
    };
    for (const Node& nd : nodes) check_sample(nd);

    // Bisect every step whose principal argument jump reaches pi/2.  A gap
    // that stays at pi/2 while its parameter interval shrinks to nothing is
    // a zero sitting on the path below the detection threshold.
    int refinements = 0;
    const int budget = 200000;
    std::size_t i = 0;
    while (i + 1 < nodes.size()) {
        const double d =
            principal_arg_diff(nodes[i + 1].f.arg, nodes[i].f.arg);
        if (std::abs(d) < PI / 2.0) {
            ++i;
            continue;
        }
        int pc = nodes[i + 1].piece;
        double ua = (nodes[i].piece == pc) ? nodes[i].u : 0.0;
        double ub = nodes[i + 1].u;
        if (ub - ua < 1e-12)
            throw NonRectifiableError(
                "trace_boundary: argument step will not fall below pi/2 --"
                " zero on the path below zero_tol scale");
        if (++refinements > budget)
            throw NonRectifiableError(
                "trace_boundary: refinement depth limit exceeded");
        Node mid;
        mid.piece = pc;
        mid.u = 0.5 * (ua + ub);
        mid.w = pieces[static_cast<std::size_t>(pc)].at(mid.u);
        mid.f = f(mid.w);
        check_sample(mid);
        nodes.insert(nodes.begin() + static_cast<std::ptrdiff_t>(i) + 1, mid);
    }

    // Closure: the loop by construction ends where it starts; snap the last
    // node onto the first so downstream consumers can rely on exact equality.
    if (std::abs(nodes.back().w - nodes.front().w) > 1e-9)
        throw NonRectifiableError("trace_boundary: path failed to close");
    nodes.back().w = nodes.front().w;
    nodes.back().f = nodes.front().f;

    path.samples.resize(nodes.size());
    path.refinements = refinements;
    double accum = nodes.front().f.arg;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k > 0) {
            const double d =
                principal_arg_diff(nodes[k].f.arg, nodes[k - 1].f.arg);
            accum += d;
            path.max_step = std::max(path.max_step, std::abs(d));
        }
        BoundarySample& s = path.samples[k];
        s.w = nodes[k].w;
        s.f = nodes[k].f;
        s.log_mag = nodes[k].f.log_mag;
        s.arg_accum = accum;
    }
    return path;
}

LogEvaluator xi_scaled_evaluator() {
    return [](cplx w) { return LogComplex::from_value(Xi(2.0 * w)); };
}

LogEvaluator unit_pn_evaluator(int N, UnitEvaluator unit) {
    return [N, unit = std::move(unit)](cplx w) {
        return LogComplex::from_value(unit(w)) * P_N_log(N, w);
    };
}

} // namespace

StripRectangle::StripRectangle(double half_width, double half_height)
    : T(half_width), eta(half_height) {
    if (!(half_width > 0.0))
        throw DomainError("StripRectangle: half-width T must be positive");
    if (!(half_height > 0.0))
        throw DomainError("StripRectangle: half-height eta must be positive");
}

LogEvaluator make_log_evaluator(std::function<cplx(cplx)> f) {
    return [g = std::move(f)](cplx w) { return LogComplex::from_value(g(w)); };
}

BoundaryPath trace_boundary(const LogEvaluator& f, const StripRectangle& rect,
                            double zero_tol, double indent_radius) {
    if (!(zero_tol > 0.0))
        throw DomainError("trace_boundary: zero_tol must be positive");
    return trace_core(f, rect, std::log(zero_tol), indent_radius, 512);
}

WindingReport winding_number(const BoundaryPath& path) {
    if (path.samples.size() < 3)
        throw DomainError("winding_number: path has too few samples");
    WindingReport rep;
    rep.total_arg_change =
        path.samples.back().arg_accum - path.samples.front().arg_accum;
    rep.max_step = path.max_step;
    rep.refinements = path.refinements;
    rep.winding = static_cast<int>(std::lround(rep.total_arg_change / TWO_PI));
    const double defect =
        std::abs(rep.total_arg_change - TWO_PI * rep.winding);
    // 0.01 absolute is the tighter of the two drift budgets the report
    // format tolerates; anything returned from here satisfies both.
    if (defect >= 0.01)
        throw AmbiguousWindingError(
            "winding_number: total argument change is not close enough to an"
            " integer multiple of 2 pi");
    return rep;
}

cplx bridge_unit(cplx w) { return PI * (4.0 * w * w + 1.0) / 8.0; }

LogComplex seam_ratio(cplx w, int N, const UnitEvaluator& unit) {
    const cplx u = unit(w);
    if (std::abs(u) == 0.0)
        throw DomainError("seam_ratio: unit vanishes at w");
    const LogComplex p = P_N_log(N, w);
    if (p.is_zero() || std::isnan(p.log_mag))
        throw PoleAtZeroOfPNError("seam_ratio: P_N vanishes at w");
    const LogComplex x = LogComplex::from_value(Xi(2.0 * w));
    return x / (LogComplex::from_value(u) * p);
}

SeparationReport separation_scan(const StripRectangle& rect, int N,
                                 const UnitEvaluator& unit, int samples) {
    if (samples < 256)
        throw DomainError("separation_scan: need at least 256 samples");
    if (N < 3) throw DomainError("separation_scan: need N >= 3");

    // Reject degenerate units up front by sampling the boundary.
    {
        const auto corner = rect_corners(rect);
        for (int e = 0; e < 4; ++e) {
            const cplx a = corner[static_cast<std::size_t>(e)];
            const cplx b = corner[static_cast<std::size_t>((e + 1) % 4)];
            for (int k = 0; k < 64; ++k) {
                const double u = (k + 0.5) / 64.0;
                if (std::abs(unit(a + u * (b - a))) == 0.0)
                    throw DomainError(
                        "separation_scan: unit vanishes on the rectangle"
                        " boundary");
            }
        }
    }

    const LogEvaluator X_eval = xi_scaled_evaluator();
    const LogEvaluator ref_eval = unit_pn_evaluator(N, unit);
    const BoundaryPath path_X =
        trace_core(X_eval, rect, kScanLogTol, kScanIndent, samples);
    const BoundaryPath path_ref =
        trace_core(ref_eval, rect, kScanLogTol, kScanIndent, samples);

    // sup |X - U P_N| and inf |U P_N| over the union of both refined sample
    // sets.  Values are reconstructed in plain form; if |U P_N| exceeds
    // double range the comparison degenerates honestly (inf < inf is false).
    std::vector<cplx> points;
    points.reserve(path_X.samples.size() + path_ref.samples.size());
    for (const BoundarySample& s : path_X.samples) points.push_back(s.w);
    for (const BoundarySample& s : path_ref.samples) points.push_back(s.w);

    std::vector<double> diff(points.size()), ref(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const cplx w = points[i];
        const cplx x = Xi(2.0 * w);
        const cplx up = ref_eval(w).value();
        diff[i] = std::abs(x - up);
        ref[i] = std::abs(up);
    });

    SeparationReport rep;
    rep.T = rect.T;
    rep.eta = rect.eta;
    rep.N = N;
    rep.sup_diff = 0.0;
    rep.inf_ref = ref.empty() ? 0.0 : ref.front();
    for (std::size_t i = 0; i < points.size(); ++i) {
        rep.sup_diff = std::max(rep.sup_diff, diff[i]);
        rep.inf_ref = std::min(rep.inf_ref, ref[i]);
    }
    rep.holds = rep.sup_diff < rep.inf_ref;

    if (rep.holds) {
        // Rouche consequence: with the inequality in hand the two windings
        // must agree; check it rather than assume it.
        rep.windings_checked = true;
        rep.winding_X = winding_number(path_X).winding;
        rep.winding_ref = winding_number(path_ref).winding;
    }
    return rep;
}

SectorReport sector_scan(const StripRectangle& rect, int N,
                         const UnitEvaluator& unit, double theta) {
    if (!(theta > 0.0 && theta < PI / 2.0))
        throw DomainError("sector_scan: theta must lie in (0, pi/2)");
    const BoundaryPath path = seam_boundary_trace(rect, N, unit);

    SectorReport rep;
    rep.T = rect.T;
    rep.eta = rect.eta;
    rep.contains_zero_on_boundary = !path.indentations.empty();
    for (const BoundarySample& s : path.samples)
        rep.theta_max = std::max(rep.theta_max, std::abs(s.arg_accum));
    return rep;
}

BoundaryPath seam_boundary_trace(const StripRectangle& rect, int N,
                                 const UnitEvaluator& unit) {
    if (N < 3) throw DomainError("seam_boundary_trace: need N >= 3");
    UnitEvaluator unit_copy = unit;
    const LogEvaluator ratio = [N, unit_copy](cplx w) {
        return seam_ratio(w, N, unit_copy);
    };
    // The ratio's scale is arbitrary; anchor the zero threshold 1e-9 below
    // the median boundary magnitude instead of at an absolute level.
    const auto corner = rect_corners(rect);
    std::vector<double> lm;
    lm.reserve(256);
    for (int e = 0; e < 4; ++e) {
        const cplx a = corner[static_cast<std::size_t>(e)];
        const cplx b = corner[static_cast<std::size_t>((e + 1) % 4)];
        for (int k = 0; k < 64; ++k)
            lm.push_back(ratio(a + ((k + 0.5) / 64.0) * (b - a)).log_mag);
    }
    std::nth_element(lm.begin(), lm.begin() + static_cast<std::ptrdiff_t>(lm.size() / 2),
                     lm.end());
    const double median = lm[lm.size() / 2];
    return trace_core(ratio, rect, median + kScanLogTol, kScanIndent, 1024);
}

ZeroDivisorRecord zero_divisor_compare(const StripRectangle& rect, int N,
                                       bool include_origin) {
    if (N < 7)
        throw DomainError("zero_divisor_compare: need N >= 7 so all"
                          " determinant zeros are real");

    const BoundaryPath path = trace_core(xi_scaled_evaluator(), rect,
                                         kScanLogTol, kScanIndent, 512);
    ZeroDivisorRecord rec;
    rec.winding_X = winding_number(path).winding;

    // Distinct real zero locations of P_N with |Re w| <= T; the structural
    // origin zero (k = 0) only on request.
    const DeterminantZeros dz = determinant_zeros(N);
    std::vector<double> locs;
    for (const cplx& z : dz.zeros) {
        if (std::abs(z.imag()) > 1e-12) continue;
        if (std::abs(z.real()) > rect.T + 1e-12) continue;
        if (!include_origin && std::abs(z.real()) < 1e-12) continue;
        locs.push_back(z.real());
    }
    std::sort(locs.begin(), locs.end());
    int count = 0;
    for (std::size_t i = 0; i < locs.size(); ++i)
        if (i == 0 || locs[i] - locs[i - 1] > 1e-9) ++count;
    rec.real_zeros_PN_in_T = count;
    rec.match = (rec.winding_X == rec.real_zeros_PN_in_T);
    return rec;
}

} // namespace seamlab
