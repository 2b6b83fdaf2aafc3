#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgcs {

// Every element-wise kernel takes one of these. `serial` is the reference path
// the tests compare against; results are bit-identical because each element is
// computed independently with a fixed summation order.
enum class Execution { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Runs fn(i) for i in [0, count). Exceptions thrown inside the parallel region
// are captured and the first one is rethrown on the calling thread.
template <typename Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
    if (exec == Execution::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace sgcs
