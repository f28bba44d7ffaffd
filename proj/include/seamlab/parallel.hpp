#pragma once

#include <cstddef>
#include <functional>

namespace seamlab {

// Thread count used by the OpenMP kernels.  SEAMLAB_THREADS wins if set and
// positive; otherwise whatever OpenMP considers the machine default.
// Returns 1 when built without OpenMP.
int thread_count();

// Shared-nothing parallel loop: body(i) for i in [0, n).  Each body writes
// only slots it owns (results indexed by i), so the output is identical to
// the serial loop whatever the schedule.  Reductions are done by the caller
// as a serial pass over the filled buffer -- that keeps floating-point
// summation order fixed and results byte-reproducible across thread counts.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Serial twin of parallel_for, kept as the reference implementation the
// tests compare against (and the fallback in non-OpenMP builds).
void serial_for(std::size_t n, const std::function<void(std::size_t)>& body);

bool openmp_enabled();

} // namespace seamlab
