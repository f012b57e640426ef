#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

/// Evaluation of an independent function over a parameter grid.
///
/// `map_parallel` is the OpenMP kernel used by sweeps and peak searches;
/// `map_serial` is the reference it is tested against. Both return results in
/// input order, so output assembly never depends on thread scheduling.
namespace lipkin::grid {

template <class T, class F>
auto map_serial(std::span<const T> xs, F&& f) {
    using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<R> out;
    out.reserve(xs.size());
    for (const T& x : xs) out.push_back(f(x));
    return out;
}

/// `jobs <= 0` leaves the thread count to the OpenMP runtime. The first
/// exception (lowest index) is rethrown after the loop.
template <class T, class F>
auto map_parallel(std::span<const T> xs, F&& f, int jobs = 0) {
    using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs.size());
    std::vector<R> out(xs.size());
    std::vector<std::exception_ptr> errors(xs.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class T, class F>
auto map(std::span<const T> xs, F&& f, int jobs) {
    if (jobs == 1) return map_serial(xs, std::forward<F>(f));
    return map_parallel(xs, std::forward<F>(f), jobs);
}

/// n points from a to b inclusive.
inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    v.back() = b;
    return v;
}

}  // namespace lipkin::grid
