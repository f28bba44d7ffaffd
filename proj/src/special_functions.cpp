#include "seamlab/special_functions.hpp"

#include <algorithm>
#include <cmath>

#include "seamlab/errors.hpp"

namespace seamlab {

namespace {

constexpr double PI = 3.141592653589793238462643383279502884;
constexpr double HALF_LOG_2PI = 0.91893853320467274178032973640562;
constexpr double EULER_GAMMA = 0.57721566490153286060651209008240;

// Stirling coefficients B_{2n}/(2n(2n-1)).  Twelve terms put the series
// remainder near 1e-16 once |z| >= 12 (the shift threshold below).
constexpr double STIR[12] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    854513.0 / 63756.0,
    -236364091.0 / 1506960.0,
};

// Euler-Maclaurin tail coefficients B_{2k}/(2k)! for zeta.
constexpr double EM_COEF[12] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    854513.0 / 155112100433309859840000.0,
    -236364091.0 / 1693824136731743669452800000.0,
};

// Euler-Maclaurin for Re s >= -1/2 (left of that the alternating-sign
// cancellation in the tail corrections eats digits; zeta() reflects first).
cplx zeta_em(cplx s) {
    const int N =
        std::max(20, static_cast<int>(std::ceil(0.6 * std::abs(s.imag()))) + 24);
    cplx sum = 0.0;
    for (int n = 1; n < N; ++n)
        sum += std::exp(-s * std::log(static_cast<double>(n)));
    const double lnN = std::log(static_cast<double>(N));
    sum += 0.5 * std::exp(-s * lnN);
    sum += std::exp((1.0 - s) * lnN) / (s - 1.0);
    // tail: sum_k B_{2k}/(2k)! * (s)_{2k-1} * N^{-s-2k+1}
    cplx poch = s;
    cplx npow = std::exp(-(s + 1.0) * lnN);
    const double n2 = static_cast<double>(N) * static_cast<double>(N);
    for (int k = 1; k <= 12; ++k) {
        sum += EM_COEF[k - 1] * poch * npow;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        npow /= n2;
    }
    return sum;
}

// sin(pi s / 2) with exact zeros on the real axis (callers rely on the
// trivial zeros of zeta being exact zeros, not 1e-16 noise).
cplx sin_pi_half(cplx s) {
    if (s.imag() == 0.0) {
        const double m = std::remainder(s.real(), 4.0); // in [-2, 2]
        if (m == 0.0 || m == 2.0 || m == -2.0) return 0.0;
        return std::sin(PI * m / 2.0);
    }
    return std::sin(cplx(PI / 2.0, 0.0) * s);
}

} // namespace

cplx log_gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw PoleError("log_gamma: pole at non-positive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() < 0.5) {
        // Reflection.  log sin(pi z) needs the branch that stays continuous
        // for Im z >= 0: from sin(pi z) = e^{-i pi z}(1 - e^{2 pi i z}) i/2,
        // the middle log stays near 0 because |e^{2 pi i z}| <= 1 up here.
        const cplx log_sin = cplx(0.0, -PI) * z +
                             std::log(1.0 - std::exp(cplx(0.0, 2.0 * PI) * z)) +
                             std::log(cplx(0.0, 0.5));
        return std::log(PI) - log_sin - log_gamma(1.0 - z);
    }
    cplx zz = z;
    cplx shift_acc = 0.0;
    while (std::abs(zz) < 12.0) {
        shift_acc += std::log(zz);
        zz += 1.0;
    }
    const cplx inv2 = 1.0 / (zz * zz);
    cplx series = 0.0;
    cplx zpow = 1.0 / zz;
    for (int n = 0; n < 12; ++n) {
        series += STIR[n] * zpow;
        zpow *= inv2;
    }
    const cplx stirling = (zz - 0.5) * std::log(zz) - zz + HALF_LOG_2PI + series;
    return stirling - shift_acc;
}

cplx zeta(cplx s) {
    if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    if (s.real() >= -0.5) return zeta_em(s);
    if (s.imag() == 0.0) {
        const double r = s.real();
        if (r == std::floor(r) && std::fmod(r, 2.0) == 0.0) return 0.0;
    }
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s); the reflected
    // argument has Re >= 3/2 where Euler-Maclaurin is at its best.
    const cplx factor = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(PI) +
                                 log_gamma(1.0 - s));
    return factor * sin_pi_half(s) * zeta_em(1.0 - s);
}

cplx xi_completed(cplx w) {
    // Mirror far-left arguments: the direct arrangement below hits Gamma
    // poles at w = -2, -4, ... that only cancel analytically.  The cutover
    // at -1.75 stays outside |Re w - 1/2| <= 2, so symmetry tests on that
    // band always compare two direct evaluations.
    if (w.real() < -1.75) return xi_completed(1.0 - w);
    // Pole-free arrangement: (w-1) zeta(w) * pi^{-w/2} Gamma(w/2 + 1).
    cplx regular;
    if (std::abs(w - 1.0) < 1e-8)
        regular = 1.0 + EULER_GAMMA * (w - 1.0); // (w-1) zeta(w) near the pole
    else
        regular = (w - 1.0) * zeta(w);
    return regular * std::exp(log_gamma(0.5 * w + 1.0) - 0.5 * w * std::log(PI));
}

cplx Xi(cplx z) { return xi_completed(cplx(0.5, 0.0) + cplx(0.0, 1.0) * z); }

ZeroList locate_real_zeros(double z_max, double tol) {
    if (!(z_max > 0.0)) throw DomainError("locate_real_zeros: z_max must be > 0");
    if (!(tol > 0.0)) throw DomainError("locate_real_zeros: tol must be > 0");
    auto g = [](double z) { return Xi(cplx(z, 0.0)).real(); };

    ZeroList out;
    out.bracket_width = 0.0;
    const double step = 0.25;
    const int nsteps = static_cast<int>(std::ceil(z_max / step));
    double a = 0.0;
    double ga = g(a);
    for (int i = 1; i <= nsteps; ++i) {
        const double b = std::min(i * step, z_max);
        const double gb = g(b);
        if (gb == 0.0) {
            out.ordinates.push_back(b);
            out.bracket_width = std::max(out.bracket_width, tol);
        } else if (ga * gb < 0.0) {
            double lo = a, hi = b, glo = ga;
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g(mid);
                if (gm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (glo * gm < 0.0) {
                    hi = mid;
                } else {
                    lo = mid;
                    glo = gm;
                }
            }
            out.ordinates.push_back(0.5 * (lo + hi));
            out.bracket_width = std::max(out.bracket_width, hi - lo);
        }
        a = b;
        ga = gb;
    }
    return out;
}

} // namespace seamlab
