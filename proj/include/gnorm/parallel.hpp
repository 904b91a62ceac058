#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace gnorm {

// Execution mode for the data-parallel outer loops (per-degree spectra,
// per-instance audits, per-slice tables). Serial is the reference path;
// both modes must produce identical results and the tests assert it.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode mode);

// Ordered map: results[i] = fn(i). Items must be independent.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, ExecMode mode, F&& fn) {
    std::vector<T> results(n);
#if defined(_OPENMP)
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(n); ++i)
            results[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        return results;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
}

}  // namespace gnorm
