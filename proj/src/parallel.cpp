#include "seamlab/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef SEAMLAB_OPENMP
#include <omp.h>
#endif

namespace seamlab {

int thread_count() {
#ifdef SEAMLAB_OPENMP
    if (const char* env = std::getenv("SEAMLAB_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (...) {
            // unparsable value: fall through to the OpenMP default
        }
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    for (std::size_t i = 0; i < n; ++i) body(i);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
#ifdef SEAMLAB_OPENMP
    const int threads = thread_count();
    if (threads > 1 && n > 1) {
        const long long m = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long i = 0; i < m; ++i) body(static_cast<std::size_t>(i));
        return;
    }
#endif
    serial_for(n, body);
}

bool openmp_enabled() {
#ifdef SEAMLAB_OPENMP
    return true;
#else
    return false;
#endif
}

} // namespace seamlab
