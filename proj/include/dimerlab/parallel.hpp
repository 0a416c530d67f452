#pragma once

#include <cstddef>

namespace dimerlab {

// Scans and sweeps are loops over independent pure computations; every kernel
// that uses parallel_for also accepts Execution::Serial, which is the reference
// path the tests compare against.
enum class Execution { Serial, Parallel };

template <typename Fn>
void parallel_for(std::size_t n, Execution exec, Fn&& fn) {
#ifdef DIMERLAB_HAVE_OPENMP
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace dimerlab
