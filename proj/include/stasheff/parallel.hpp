#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stasheff {

/// Selects the serial reference loop or the OpenMP kernel. Both produce
/// results in index order, so outputs are identical.
enum class Exec { Serial, Parallel };

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// out[i] = fn(i) for i in [0, count).
template <class T, class Fn>
std::vector<T> map_indexed_serial(std::size_t count, Fn&& fn) {
    std::vector<T> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

template <class T, class Fn>
std::vector<T> map_indexed(std::size_t count, Fn&& fn, Exec exec = Exec::Parallel) {
    if (exec == Exec::Serial) return map_indexed_serial<T>(count, fn);
    std::vector<T> out(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
}

}  // namespace stasheff
