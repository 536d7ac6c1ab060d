#ifndef NLSHOCK_PARALLEL_HPP
#define NLSHOCK_PARALLEL_HPP

#include <cstddef>

#ifdef NLSHOCK_OPENMP
#include <omp.h>
#endif

namespace nlshock::par {

// Static schedule keeps run-to-run output bit-identical for a fixed binary.
template <class F>
void parallel_for(std::ptrdiff_t n, F&& fn) {
#ifdef NLSHOCK_OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
#endif
}

// Serial reference path, kept so tests and benchmarks can compare against
// the OpenMP kernels.
template <class F>
void serial_for(std::ptrdiff_t n, F&& fn) {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

inline int thread_count() {
#ifdef NLSHOCK_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace nlshock::par

#endif
