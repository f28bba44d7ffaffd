#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <utility>
#include <vector>

#include "seamlab/cycle_spectral.hpp"
#include "seamlab/errors.hpp"
#include "seamlab/special_functions.hpp"
#include "seamlab/strip_scan.hpp"

#include "oracles.hpp"

using namespace seamlab;

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;

LogEvaluator poly_eval(std::vector<cplx> roots) {
    return make_log_evaluator([roots = std::move(roots)](cplx w) {
        cplx v = 1.0;
        for (const cplx& r : roots) v *= (w - r);
        return v;
    });
}

} // namespace

TEST_CASE("rectangle and tracer argument validation") {
    CHECK_THROWS_AS(StripRectangle(0.0, 0.2), DomainError);
    CHECK_THROWS_AS(StripRectangle(1.0, -0.1), DomainError);
    const StripRectangle rect(1.5, 0.3);
    CHECK(rect.T == 1.5);
    CHECK(rect.eta == 0.3);
    const LogEvaluator f = poly_eval({cplx(0.1, 0.0)});
    CHECK_THROWS_AS(trace_boundary(f, rect, 0.0, 1e-3), DomainError);
    CHECK_THROWS_AS(trace_boundary(f, rect, 1e-6, -1.0), DomainError);
}

TEST_CASE("winding of random polynomials matches the interior root count") {
    const StripRectangle rect(1.5, 0.3);
    std::mt19937 gen(416u);
    std::uniform_real_distribution<double> re(-2.0, 2.0);
    std::uniform_real_distribution<double> im(-0.5, 0.5);
    std::uniform_int_distribution<int> deg(1, 4);

    for (int trial = 0; trial < 12; ++trial) {
        const int d = deg(gen);
        std::vector<cplx> roots;
        int inside = 0;
        while (static_cast<int>(roots.size()) < d) {
            const cplx r(re(gen), im(gen));
            const double dx = std::abs(r.real()) - rect.T;
            const double dy = std::abs(r.imag()) - rect.eta;
            // keep a clean 0.08 margin to the boundary on either side, so
            // the trace never has to decide a borderline case
            if (dx < -0.08 && dy < -0.08) {
                roots.push_back(r);
                ++inside;
            } else if (dx > 0.08 || dy > 0.08) {
                roots.push_back(r);
            }
        }
        const BoundaryPath path =
            trace_boundary(poly_eval(roots), rect, 1e-6, 1e-3);
        const WindingReport rep = winding_number(path);
        CAPTURE(trial);
        CHECK(rep.winding == inside);
        CHECK(rep.max_step < PI / 2.0);
        CHECK(path.samples.front().w == path.samples.back().w);
    }
}

TEST_CASE("winding counts multiplicity and ignores outside roots") {
    const StripRectangle rect(1.5, 0.3);
    const cplx z(0.2, 0.05);
    CHECK(winding_number(trace_boundary(poly_eval({z, z}), rect, 1e-6, 1e-3))
              .winding == 2);
    CHECK(winding_number(trace_boundary(poly_eval({cplx(3.0, 0.0)}), rect,
                                        1e-6, 1e-3))
              .winding == 0);
    // constant: no roots anywhere, argument never moves
    const LogEvaluator c =
        make_log_evaluator([](cplx) { return cplx(2.5, 0.0); });
    CHECK(winding_number(trace_boundary(c, rect, 1e-6, 1e-3)).winding == 0);
}

TEST_CASE("a zero on the wall is excluded by the interior detour") {
    const StripRectangle rect(1.5, 0.3);
    // simple zero sitting exactly on the top edge
    const BoundaryPath path =
        trace_boundary(poly_eval({cplx(0.4, 0.3)}), rect, 0.01, 1e-2);
    REQUIRE(path.indentations.size() == 1);
    CHECK(std::abs(path.indentations[0].center - cplx(0.4, 0.3)) < 1e-9);
    CHECK(path.indentations[0].radius == 1e-2);
    CHECK(winding_number(path).winding == 0);

    // same convention at a corner, where the detour is a quarter circle
    const BoundaryPath pc =
        trace_boundary(poly_eval({cplx(1.5, 0.3)}), rect, 0.01, 1e-2);
    REQUIRE(pc.indentations.size() == 1);
    CHECK(std::abs(pc.indentations[0].center - cplx(1.5, 0.3)) < 1e-6);
    CHECK(winding_number(pc).winding == 0);
}

TEST_CASE("detour radius does not change what is counted") {
    const StripRectangle rect(1.5, 0.3);
    // one root inside, one on the wall; the wall root must stay excluded and
    // the interior one counted at every detour radius
    const std::vector<cplx> roots{cplx(0.3, 0.1), cplx(-0.213, 0.3)};
    for (double rho : {1e-2, 1e-3, 1e-4}) {
        CAPTURE(rho);
        const BoundaryPath path =
            trace_boundary(poly_eval(roots), rect, 0.02, rho);
        REQUIRE(path.indentations.size() == 1);
        CHECK(std::abs(path.indentations[0].center - cplx(-0.213, 0.3)) <
              1e-9);
        CHECK(path.indentations[0].radius == rho);
        CHECK(winding_number(path).winding == 1);
    }
}

TEST_CASE("refinement engages for a root grazing the wall from inside") {
    const StripRectangle rect(1.5, 0.3);
    // Perpendicular distance 3.5e-4 against a 1e-3 sampling step: the arg
    // jump across the root starts above pi/2 (the jump is 2 atan(h/2d), so
    // anything closer than h/2 trips it), while |f| at the nearest sample
    // stays two decades above zero_tol -- refinement, not indentation.
    const BoundaryPath path =
        trace_boundary(poly_eval({cplx(0.07025, 0.29965)}), rect, 1e-6, 1e-3);
    CHECK(path.refinements > 0);
    CHECK(path.max_step < PI / 2.0);
    CHECK(winding_number(path).winding == 1);
}

TEST_CASE("zero hiding below the detection threshold is refused loudly") {
    const StripRectangle rect(1.5, 0.3);
    // the zero sits on the top edge but zero_tol is far too small for the
    // outline scan to see it, so the argument step across it never falls
    // below pi/2 and the tracer must give up rather than return nonsense
    CHECK_THROWS_AS(trace_boundary(poly_eval({cplx(0.4001, 0.3)}), rect,
                                   1e-30, 1e-3),
                    NonRectifiableError);
}

TEST_CASE("overlapping detours are refused") {
    const StripRectangle rect(1.5, 0.3);
    // two wall zeros 0.1 apart against an indent radius of 0.08: the
    // semicircles would intersect
    CHECK_THROWS_AS(trace_boundary(poly_eval({cplx(-0.05, 0.3),
                                              cplx(0.05, 0.3)}),
                                   rect, 2e-3, 0.08),
                    IndentationOverlapError);
    // a wall zero close to (but not at) a corner: the detour would cross the
    // adjacent edge
    CHECK_THROWS_AS(trace_boundary(poly_eval({cplx(1.4, 0.3)}), rect, 0.01,
                                   0.08),
                    IndentationOverlapError);
}

TEST_CASE("winding rejects drifted argument totals") {
    BoundaryPath p;
    p.samples.resize(4);
    p.samples[0].arg_accum = 0.0;
    p.samples[1].arg_accum = 2.0;
    p.samples[2].arg_accum = 4.0;
    p.samples[3].arg_accum = 6.0; // 0.28 short of one full turn
    CHECK_THROWS_AS(winding_number(p), AmbiguousWindingError);

    BoundaryPath tiny;
    tiny.samples.resize(2);
    CHECK_THROWS_AS(winding_number(tiny), DomainError);
}

TEST_CASE("seam ratio: poles, unit zeros, and the plain-value crosscheck") {
    CHECK_THROWS_AS(seam_ratio(cplx(0.0, 0.0), 16, bridge_unit),
                    PoleAtZeroOfPNError);
    // the bridge unit vanishes exactly at w = i/2
    CHECK_THROWS_AS(seam_ratio(cplx(0.0, 0.5), 16, bridge_unit), DomainError);

    CHECK(std::abs(bridge_unit(cplx(0.0, 0.0)) - cplx(PI / 8.0, 0.0)) == 0.0);

    const cplx w(1.0, 0.1);
    const cplx plain = Xi(2.0 * w) / (bridge_unit(w) * P_N(16, w));
    const cplx logged = seam_ratio(w, 16, bridge_unit).value();
    CHECK(std::abs(logged - plain) < 1e-10 * std::abs(plain));
}

TEST_CASE("seam boundary trace closes and sees exactly the enclosed poles") {
    // |Re w| <= 1, |Im w| <= 0.2, N = 16: the ratio's poles inside are the
    // origin (double, from the k = 0 branch of q~) and +-0.390563,
    // +-0.768277 (each double, paired eigenvalues), ten in all -- so the
    // ratio winds by -10 while Xi(2w) contributes no zeros this close in.
    const StripRectangle rect(1.0, 0.2);
    const BoundaryPath path = seam_boundary_trace(rect, 16, bridge_unit);
    CHECK(path.samples.size() > 100);
    CHECK(path.samples.front().w == path.samples.back().w);
    CHECK(path.max_step < PI / 2.0);
    CHECK(path.indentations.empty());
    for (const BoundarySample& s : path.samples) {
        CHECK(std::isfinite(s.log_mag));
        CHECK(std::isfinite(s.arg_accum));
    }
    CHECK(winding_number(path).winding == -10);
    CHECK_THROWS_AS(seam_boundary_trace(rect, 2, bridge_unit), DomainError);
}

TEST_CASE("separation scan reports the inequality honestly") {
    CHECK_THROWS_AS(separation_scan(StripRectangle(2.0, 0.2), 16, bridge_unit,
                                    128),
                    DomainError);
    CHECK_THROWS_AS(separation_scan(StripRectangle(2.0, 0.2), 2, bridge_unit,
                                    256),
                    DomainError);
    CHECK_THROWS_AS(separation_scan(
                        StripRectangle(2.0, 0.2), 16,
                        [](cplx) { return cplx(0.0, 0.0); }, 256),
                    DomainError);

    const SeparationReport rep =
        separation_scan(StripRectangle(2.0, 0.2), 16, bridge_unit, 256);
    CHECK(rep.T == 2.0);
    CHECK(rep.eta == 0.2);
    CHECK(rep.N == 16);
    CHECK(rep.sup_diff > 0.0);
    CHECK(rep.inf_ref > 0.0);
    // X and U P_N live on completely different scales at desk size, so the
    // inequality fails and the Rouche windings are (correctly) not claimed
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.windings_checked);
}

TEST_CASE("sector scan bounds the seam argument along the boundary") {
    CHECK_THROWS_AS(sector_scan(StripRectangle(2.0, 0.2), 16, bridge_unit,
                                0.0),
                    DomainError);
    CHECK_THROWS_AS(sector_scan(StripRectangle(2.0, 0.2), 16, bridge_unit,
                                2.0),
                    DomainError);
    const SectorReport rep =
        sector_scan(StripRectangle(2.0, 0.2), 16, bridge_unit, 1.0);
    CHECK(rep.T == 2.0);
    CHECK_FALSE(rep.contains_zero_on_boundary);
    // 13 double poles inside make the argument run far past any sector
    CHECK(rep.theta_max > 2.0 * PI);
}

TEST_CASE("zero-divisor comparison: winding against determinant zeros") {
    CHECK_THROWS_AS(zero_divisor_compare(StripRectangle(2.0, 0.2), 6),
                    DomainError);

    const ZeroDivisorRecord small =
        zero_divisor_compare(StripRectangle(2.0, 0.2), 16);
    CHECK(small.winding_X == 0);
    CHECK(small.real_zeros_PN_in_T == 12);
    CHECK_FALSE(small.match);

    const ZeroDivisorRecord with_origin =
        zero_divisor_compare(StripRectangle(2.0, 0.2), 16, true);
    CHECK(with_origin.real_zeros_PN_in_T == 13);

    // first window that actually contains zeta zeros: Xi(2w) winds twice
    // (w = +-gamma_1/2 = +-7.0674), while all of P_64's zeros crowd into
    // |Re w| <= 2.004 -- the counts disagree and the record says so
    const ZeroDivisorRecord big =
        zero_divisor_compare(StripRectangle(8.0, 0.2), 64);
    CHECK(big.winding_X == 2);
    CHECK(big.real_zeros_PN_in_T == 64);
    CHECK_FALSE(big.match);
}
