#pragma once

#include <vector>

#ifdef SPECSET_HAVE_OPENMP
#include <omp.h>
#endif

namespace specset {

inline bool openmp_available() {
#ifdef SPECSET_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

inline int default_workers() {
#ifdef SPECSET_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// body(i) for i in [0, n).  workers <= 1 selects the serial reference loop;
/// results must be written to disjoint slots so both paths are
/// deterministic and identical.
template <class F>
void parallel_for(int n, F&& body, int workers = default_workers()) {
#ifdef SPECSET_HAVE_OPENMP
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    (void)workers;
    for (int i = 0; i < n; ++i) body(i);
}

/// Indexed map: out[i] = f(i); assembly is by index, so the result does not
/// depend on completion order.
template <class T, class F>
std::vector<T> parallel_map(int n, F&& f, int workers = default_workers()) {
    std::vector<T> out(static_cast<size_t>(n));
    parallel_for(
        n, [&](int i) { out[static_cast<size_t>(i)] = f(i); }, workers);
    return out;
}

}  // namespace specset
