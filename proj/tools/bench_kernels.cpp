// Timing harness for the parallel grid kernels against their serial twins.
// The two loops must produce bitwise-identical buffers (reductions happen in
// a serial pass by design), so the bench doubles as a quick determinism check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "seamlab/cycle_spectral.hpp"
#include "seamlab/parallel.hpp"
#include "seamlab/special_functions.hpp"
#include "seamlab/theta_kernels.hpp"

namespace {

double time_loop(void (*loop)(std::size_t,
                              const std::function<void(std::size_t)>&),
                 std::size_t n, const std::function<void(std::size_t)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    loop(n, body);
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - t0;
    return dt.count();
}

void bench(const char* name, std::size_t n,
           const std::function<void(std::size_t, std::vector<double>&)>& fill) {
    std::vector<double> serial_buf(n), parallel_buf(n);
    const double ts = time_loop(seamlab::serial_for, n,
                                [&](std::size_t i) { fill(i, serial_buf); });
    const double tp = time_loop(seamlab::parallel_for, n,
                                [&](std::size_t i) { fill(i, parallel_buf); });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_diff = std::max(max_diff,
                            std::abs(serial_buf[i] - parallel_buf[i]));
    std::printf("%-24s %9zu  %9.3f s  %9.3f s  %6.2fx  max|diff| %.1e\n",
                name, n, ts, tp, ts / tp, max_diff);
}

} // namespace

int main() {
    std::printf("openmp: %s, threads: %d\n\n",
                seamlab::openmp_enabled() ? "yes" : "no",
                seamlab::thread_count());
    std::printf("%-24s %9s  %11s  %11s  %7s\n", "kernel", "n", "serial",
                "parallel", "speedup");

    // Xi along the top edge of a desk-scale rectangle: the evaluation that
    // dominates every boundary scan.
    bench("xi-top-edge", 16384, [](std::size_t i, std::vector<double>& out) {
        const double re = -8.0 + 16.0 * static_cast<double>(i) / 16383.0;
        out[i] = std::abs(seamlab::Xi(seamlab::cplx(2.0 * re, 0.4)));
    });

    // Heat kernel over one period of a large cycle (each site costs O(N)).
    {
        const seamlab::CycleModel model(4096, 1.0);
        const double s = 4096.0 / (2.0 * std::sqrt(3.141592653589793));
        bench("cycle-heat N=4096", 4096,
              [&](std::size_t i, std::vector<double>& out) {
                  out[i] = seamlab::heat_kernel(model, s * s,
                                                static_cast<long>(i));
              });
    }

    // Completed theta on a dense log grid, the integrand of the Mellin layer.
    bench("theta-completed-grid", 1u << 20,
          [](std::size_t i, std::vector<double>& out) {
              const double t =
                  0.01 * std::exp(8.5 * static_cast<double>(i) / 1048575.0);
              out[i] = seamlab::theta_completed(t);
          });

    return 0;
}
