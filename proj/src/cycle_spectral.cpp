#include "seamlab/cycle_spectral.hpp"

#include <algorithm>
#include <cmath>

#include "seamlab/errors.hpp"
#include "seamlab/parallel.hpp"

namespace seamlab {

namespace {
constexpr double PI = 3.141592653589793238462643383279502884;
} // namespace

CycleModel::CycleModel(int n, double conductance) : N(n), a(conductance) {
    if (n < 3) throw DomainError("CycleModel: need N >= 3");
    if (!(conductance > 0.0))
        throw DomainError("CycleModel: conductance must be positive");
}

SpectralFamily eigenvalues(const CycleModel& model) {
    SpectralFamily fam;
    fam.N = model.N;
    fam.eigenvalues.resize(static_cast<std::size_t>(model.N));
    for (int k = 0; k < model.N; ++k) {
        // 4 sin^2 rather than 2 - 2cos: no cancellation for small k/N.
        const double s = std::sin(PI * k / model.N);
        fam.eigenvalues[static_cast<std::size_t>(k)] = 4.0 * s * s;
    }
    return fam;
}

double heat_kernel(const CycleModel& model, double t, long j) {
    if (!(t >= 0.0)) throw DomainError("heat_kernel: t must be >= 0");
    const int N = model.N;
    // Exact spectral sum; cos is even in k so fold k and N-k.  Never a time
    // stepper -- the scaling-limit comparisons sit at 1e-15 scale and any
    // discretisation in t would drown them.
    double sum = 1.0; // k = 0 term
    for (int k = 1; k <= N / 2; ++k) {
        const double sk = std::sin(PI * k / N);
        const double term =
            std::exp(-4.0 * model.a * t * sk * sk) * std::cos(2.0 * PI * k * j / N);
        sum += (2 * k == N) ? term : 2.0 * term;
    }
    return sum / N;
}

double wrapped_gaussian(const CycleModel& model, double t, long j, int m_max) {
    if (!(t > 0.0)) throw DomainError("wrapped_gaussian: t must be positive");
    if (m_max < 0) throw DomainError("wrapped_gaussian: m_max must be >= 0");
    const double D = model.D();
    const double denom = 4.0 * D * t;
    double sum = 0.0;
    // Sum images nearest-first so the partials are already ordered by size.
    for (int m = m_max; m >= -m_max; --m) {
        const double x = static_cast<double>(j) + static_cast<double>(m) * model.N;
        sum += std::exp(-x * x / denom);
    }
    return sum / std::sqrt(PI * denom);
}

double wrapped_gaussian_fourier(const CycleModel& model, double t, long j) {
    if (!(t > 0.0))
        throw DomainError("wrapped_gaussian_fourier: t must be positive");
    const int N = model.N;
    const double D = model.D();
    // Dual route (Poisson summation): e^{-4 pi^2 D t k^2 / N^2} dies fast,
    // so run k until the term is below 1e-20 absolute.
    const double rate = 4.0 * PI * PI * D * t / (static_cast<double>(N) * N);
    double sum = 1.0;
    for (int k = 1;; ++k) {
        const double term = std::exp(-rate * k * k);
        if (term < 1e-20) break;
        sum += 2.0 * term * std::cos(2.0 * PI * k * j / N);
    }
    return sum / N;
}

UlcltRecord ulclt_report(const CycleModel& model, double t, double t0,
                         double t1) {
    if (!(t > 0.0)) throw DomainError("ulclt_report: t must be positive");
    const int N = model.N;
    const double D = model.D();
    const double L = std::sqrt(4.0 * PI * D);
    const double s = N / L;
    const double tau = s * s * t; // diffusive clock
    const double denom = 4.0 * D * tau;

    UlcltRecord rec;
    rec.N = N;
    rec.t_in_window = (t >= t0 && t <= t1);

    // One centred period of lattice sites.  Each site is independent; the
    // slot-per-index write keeps the parallel run bit-identical to serial.
    const long j_lo = -(N / 2);
    std::vector<double> err(static_cast<std::size_t>(N));
    parallel_for(static_cast<std::size_t>(N), [&](std::size_t idx) {
        const long j = j_lo + static_cast<long>(idx);
        const double exact = heat_kernel(model, tau, j);
        const double gauss =
            std::exp(-static_cast<double>(j) * j / denom) / std::sqrt(PI * denom);
        err[idx] = std::abs(exact - gauss);
    });
    for (std::size_t idx = 0; idx < err.size(); ++idx) {
        if (err[idx] > rec.sup_error) {
            rec.sup_error = err[idx];
            rec.argmax_j = j_lo + static_cast<long>(idx);
        }
    }
    return rec;
}

double scaling_limit_residual(int N, double t, double L) {
    if (!(t > 0.0)) throw DomainError("scaling_limit_residual: t must be positive");
    if (!(L > 0.0)) throw DomainError("scaling_limit_residual: L must be positive");
    const double D = L * L / (4.0 * PI);
    const CycleModel model(N, D);
    const double s = N / L;
    const double trace_N = N * heat_kernel(model, s * s * t, 0);
    const double limit = trace_kernel_KL(t, SelfDualScale(D));
    return std::abs(trace_N - limit);
}

cplx q_tilde(int N, cplx w) {
    if (N < 3) throw DomainError("q_tilde: need N >= 3");
    // (N/pi)^2 sin^2(pi w / N): the entire, even form; equals the rescaled
    // 2 - 2cos expression but without its cancellation near w = 0.
    const cplx s = std::sin(PI * w / static_cast<double>(N));
    const double scale = N / PI;
    return scale * scale * s * s;
}

cplx P_N(int N, cplx w) {
    if (N < 3) throw DomainError("P_N: need N >= 3");
    const SpectralFamily fam = eigenvalues(CycleModel(N, 1.0));
    const cplx q = q_tilde(N, w);
    cplx prod = 1.0;
    for (double lam : fam.eigenvalues) {
        prod *= q - lam;
        if (std::abs(prod.real()) > 1e280 || std::abs(prod.imag()) > 1e280)
            throw OverflowError("P_N: plain product left double range;"
                                " evaluate P_N_log instead");
    }
    return prod;
}

LogComplex P_N_log(int N, cplx w) {
    if (N < 3) throw DomainError("P_N_log: need N >= 3");
    const SpectralFamily fam = eigenvalues(CycleModel(N, 1.0));
    const cplx q = q_tilde(N, w);
    double log_mag = 0.0;
    double arg = 0.0;
    for (double lam : fam.eigenvalues) {
        const cplx factor = q - lam;
        log_mag += std::log(std::abs(factor));
        arg += std::arg(factor);
    }
    // Reduce the accumulated argument to one branch; callers that need a
    // continuous argument track it themselves along their path.
    arg = std::remainder(arg, 2.0 * PI);
    return {log_mag, arg};
}

DeterminantZeros determinant_zeros(int N, double zero_tol) {
    if (N < 3) throw DomainError("determinant_zeros: need N >= 3");
    if (!(zero_tol > 0.0))
        throw DomainError("determinant_zeros: zero_tol must be positive");

    DeterminantZeros out;
    out.N = N;
    const SpectralFamily fam = eigenvalues(CycleModel(N, 1.0));

    for (int k = 0; k < N; ++k) {
        const double lam = fam.eigenvalues[static_cast<std::size_t>(k)];
        // Factor zero:  (N/pi)^2 sin^2(pi w/N) = lam = 4 sin^2(pi k/N)
        //  =>  sin(pi w/N) = +- c_k,  c_k = (2 pi / N) sin(pi k / N).
        const double c = (2.0 * PI / N) * std::sin(PI * k / N);
        std::vector<cplx> roots;
        if (k == 0) {
            roots.push_back(cplx(0.0, 0.0));
        } else if (c <= 1.0) {
            const double w0 = (N / PI) * std::asin(c);
            roots.push_back(cplx(w0, 0.0));
            roots.push_back(cplx(-w0, 0.0));
        } else {
            // The branch has pushed past the range of the real arcsine: the
            // zeros sit on the edges Re w = +-N/2 at height
            // beta = (N/pi) acosh(c).  Happens only for N <= 6 (c_max =
            // 2 pi/N sin(pi floor(N/2)/N) <= 1 once N >= 7).
            const double beta = (N / PI) * std::acosh(c);
            const double edge = N / 2.0;
            roots.push_back(cplx(edge, beta));
            roots.push_back(cplx(edge, -beta));
            roots.push_back(cplx(-edge, beta));
            roots.push_back(cplx(-edge, -beta));
        }
        for (const cplx& w0 : roots) {
            // Closed form or not, every zero has to actually kill its
            // factor; the knob exists so tests can tighten it.
            const double factor = std::abs(q_tilde(N, w0) - lam);
            if (factor > zero_tol * std::max(1.0, std::abs(lam)))
                throw Error("determinant_zeros: closed-form zero fails its"
                            " factor residual check");
            out.zeros.push_back(w0);
            out.max_imag = std::max(out.max_imag, std::abs(w0.imag()));
        }
    }
    std::sort(out.zeros.begin(), out.zeros.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

} // namespace seamlab
