#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace strobs {

// Execution mode for the sweep kernels. Every parallel kernel has the same
// observable behavior in Serial mode; results are written to index-addressed
// slots so the merged output is bit-identical regardless of schedule or
// thread count. The serial path is the reference implementation used by the
// tests and the benchmark.
enum class ExecMode { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Runs body(i) for i in [0, n). Parallel mode uses a dynamic OpenMP schedule;
// bodies must only write to their own slot of any shared output.
template <typename F>
void parallel_index(std::size_t n, ExecMode mode, F&& body) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace strobs
