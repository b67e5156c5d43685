#ifndef HYPERFIN_BATCH_HPP
#define HYPERFIN_BATCH_HPP

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperfin {

/// Runs body(i) for i in [0, count). jobs == 1 keeps the serial reference
/// path; jobs > 1 uses OpenMP when available. Bodies must be independent;
/// results keyed by index are deterministic either way.
template <typename Body>
void batch_run(std::size_t count, unsigned jobs, Body&& body) {
#ifdef _OPENMP
    if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads((int)jobs)
        for (long long i = 0; i < (long long)count; ++i) body((std::size_t)i);
        return;
    }
#else
    (void)jobs;
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

/// Maps body(i) -> T over [0, count) into an index-ordered vector.
template <typename T, typename Body>
std::vector<T> batch_map(std::size_t count, unsigned jobs, Body&& body) {
    std::vector<T> out(count);
    batch_run(count, jobs, [&](std::size_t i) { out[i] = body(i); });
    return out;
}

}  // namespace hyperfin

#endif
