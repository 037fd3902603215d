#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qpd {

/// Execution policy for the data-parallel kernels. `serial_reference` selects
/// the plain-loop reference implementation kept for testing; otherwise the
/// loop runs under OpenMP with `threads` threads (0 = library default).
/// Every kernel writes into preallocated per-item slots and reduces in a
/// fixed order, so results are identical for any policy.
struct ExecPolicy {
    int threads = 0;
    bool serial_reference = false;

    static ExecPolicy serial() { return ExecPolicy{0, true}; }
    static ExecPolicy parallel(int threads = 0) { return ExecPolicy{threads, false}; }
};

template <class Fn>
void for_each_index(std::size_t n, const ExecPolicy& policy, Fn&& fn) {
    if (policy.serial_reference) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
    const int nthreads = policy.threads > 0 ? policy.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) fn(i);
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace qpd
