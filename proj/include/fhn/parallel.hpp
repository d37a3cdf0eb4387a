#ifndef FHN_PARALLEL_HPP
#define FHN_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fhn {

// Execution policy for the data-parallel sweeps (grid evaluation, table
// builds, check-set scans). Every parallel loop writes disjoint slots, so
// serial and parallel runs produce bit-identical results; the serial path is
// kept as the reference implementation for tests and benchmarks.
enum class Exec { serial, par };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Fn>
void parallel_for(std::ptrdiff_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
        return;
#endif
    }
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

}  // namespace fhn

#endif
