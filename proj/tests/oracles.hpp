#pragma once

// Reference values the test suite pins implementations against.  Everything
// here was computed OUTSIDE this codebase (40-digit arbitrary-precision
// prototypes of the defining formulas, truncated to 17 significant digits),
// so a regression in the C++ evaluators cannot silently re-freeze its own
// bug.  Grouped by the layer that consumes them.

#include <complex>

namespace oracle {

using cplx = std::complex<double>;

// --- completed zeta / Xi -----------------------------------------------

inline constexpr double kXi0 = 0.49712077818831411;
inline constexpr double kXi1 = 0.48575742967098349;
inline constexpr double kXi2 = 0.45309985831293611;
inline constexpr double kXi4 = 0.34178661113813629;
inline constexpr double kXi10 = 0.037967850310935684;

// First two positive ordinates of the real zeros of Xi.
inline constexpr double kGamma1 = 14.134725141734694;
inline constexpr double kGamma2 = 21.022039638771555;

// |Xi(2 * 7.0673627)|: z chosen so 2z sits 2.6e-7 left of gamma1.
inline constexpr double kXiNearZero = 3.5710831551964318e-10;

// --- theta kernels ----------------------------------------------------

inline constexpr double kTheta1 = 1.086434811213308; // pi^{1/4} / Gamma(3/4)
inline constexpr double kPhiStar0 = -0.91356518878669199; // theta(1) - 2
inline constexpr double kFTheta0 = 0.086434811213308014;  // theta(1) - 1

inline constexpr double kBigTheta1 = 0.44669690046712344;
inline constexpr double kBigThetaHalf = 0.22449383254885572;
inline constexpr double kBigTheta2 = 0.079370555664926581;

// sum_{n>=1} n^4 e^{-pi n^2}
inline constexpr double kQuarticThetaSum = 0.043269715784041024;

// --- Laplace / Mellin layer ----------------------------------------------

inline constexpr double kBLBm12 = -4.5312793009167518; // B_LB(-1/2)
inline constexpr cplx kBLBm12i{-0.62735098092515579, 0.69302051260055559};
inline constexpr cplx kBLBm12_2i{-0.27452568014029705, 0.2056421379615236};
inline constexpr double kBLBquarter = -1.9606276772788153; // B_LB(1/4)
inline constexpr double kBLB0 = -2.0938756817131273;       // B_LB(0)

// Bilateral Laplace of Phi* at s = -1/2; satisfies
// Xi(0) = -(1/16) * this, to all computed digits.
inline constexpr double kBilateralPhiStar = -7.9539324510130258;

// Left-boundary identity residuals |Xi(2z) - 2 pi (z^2+1/16) B_LB(-1/2+iz)|.
// Not small -- the acceptance property is their reproducibility.
inline constexpr double kLbResidual0 = 2.2765499985787593;
inline constexpr double kLbResidual1 = 6.5532952027125422;
inline constexpr double kLbResidual2 = 9.0312510303276322;

// Riemann-Lebesgue defects |iw I(w) - f_theta(0)|, rows Im w = -0.4, 0, 0.4,
// columns |Re w| = 25, 50, 100.
inline constexpr double kRlDefect[3][3] = {
    {0.01255116625, 0.006291321545, 0.003147612032},
    {0.0125753641, 0.006294330428, 0.003147987663},
    {0.01259641189, 0.006296938593, 0.003148312993},
};

// --- cycle / spectral layer ----------------------------------------------

// sup_j |p_{s^2 t}(j) - gaussian| * N at t = 1, D = 1, L = sqrt(4 pi):
// nearly constant in N (the uniform local CLT at work).
inline constexpr double kUlcltSupN32 = 0.456766607979;
inline constexpr double kUlcltSupN256 = 0.457627397014;

// |N p_{s^2}(0) - K_L(1)|: empirical rate is N^{-2}.
inline constexpr double kScalingResidual64 = 2.185752412465e-04;
inline constexpr double kScalingResidual128 = 5.460432967652e-05;
inline constexpr double kScalingResidual256 = 1.364861632780e-05;

// Smallest positive determinant zeros (fundamental strip, closed form).
inline constexpr double kPNZeroN16k1 = 0.390563341209786;
inline constexpr double kPNZeroN7k1 = 0.891351846562767;

// max |qtilde_N(w) - w^2| over the |w| = 2 circle (32-point grid).
inline constexpr double kQtildeDev16 = 2.098914744415e-01;
inline constexpr double kQtildeDev128 = 3.213794210854e-03;

// --- quadrature --------------------------------------------------------

inline constexpr double kGl12Nodes[6] = {
    0.1252334085114689, 0.3678314989981802, 0.5873179542866175,
    0.7699026741943047, 0.9041172563704749, 0.9815606342467192,
};
inline constexpr double kGl12Weights[6] = {
    0.24914704581340277, 0.23349253653835481, 0.20316742672306592,
    0.16007832854334622, 0.10693932599531843, 0.04717533638651183,
};

} // namespace oracle
