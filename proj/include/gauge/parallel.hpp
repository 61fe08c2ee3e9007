#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gauge {

// Execution policy for the data-parallel kernels (facet/vertex candidate
// scans, hull membership tests, per-pair gauge evaluations, suite fan-out).
// Every kernel writes per-index slots and reduces serially afterwards, so
// serial and parallel runs produce bit-identical results; Exec::serial is
// the reference implementation the tests compare against.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);
int max_threads();

namespace detail {
struct ErrorSink {
    std::mutex m;
    std::exception_ptr first;
    void capture() {
        std::lock_guard<std::mutex> lock(m);
        if (!first) first = std::current_exception();
    }
    void rethrow_if_any() {
        if (first) std::rethrow_exception(first);
    }
};
} // namespace detail

template <class F>
void for_each_index(std::size_t n, F&& f, Exec ex) {
#ifdef _OPENMP
    if (ex == Exec::parallel && n > 1) {
        detail::ErrorSink sink;
#pragma omp parallel for schedule(dynamic, 8)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
                sink.capture();
            }
        }
        sink.rethrow_if_any();
        return;
    }
#else
    (void)ex;
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

template <class F>
void for_each_index(std::size_t n, F&& f) {
    for_each_index(n, static_cast<F&&>(f), default_exec());
}

} // namespace gauge
