#pragma once

// Data-parallel loops shared by the numeric modules. Every kernel has a
// serial reference and an OpenMP variant; both produce bit-identical results
// because each iteration writes its own slot and every reduction runs
// serially in index order afterwards.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace haarent {

enum class Execution { Serial, Parallel };

namespace kernels {

// Loops shorter than this stay serial even under Execution::Parallel.
inline constexpr std::size_t kParallelThreshold = 4;

inline bool openmp_enabled() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

inline int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

template <class Fn>
auto map_indices(std::size_t n, Fn&& fn) {
    using R = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
    std::vector<R> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
}

}  // namespace serial

namespace parallel {

// Exceptions thrown by fn are captured per index; the one with the lowest
// index is rethrown after the loop, matching the serial behaviour.
template <class Fn>
auto map_indices(std::size_t n, Fn&& fn) {
    using R = std::decay_t<std::invoke_result_t<Fn&, std::size_t>>;
    std::vector<R> out(n);
    std::vector<std::exception_ptr> errors(n);
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) if (n >= kParallelThreshold)
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace parallel

template <class Fn>
auto map_indices(std::size_t n, Fn&& fn, Execution exec) {
    if (exec == Execution::Parallel) return parallel::map_indices(n, std::forward<Fn>(fn));
    return serial::map_indices(n, std::forward<Fn>(fn));
}

// out[i] = f(xs[i])
void evaluate(const std::function<double(double)>& f, std::span<const double> xs,
              std::span<double> out, Execution exec);

struct Extrema {
    double min = 0.0;
    double max = 0.0;
    std::size_t argmin = 0;
    std::size_t argmax = 0;
};

// First occurrence wins ties. NaN values are skipped; an all-NaN or empty
// input yields min = +inf, max = -inf.
Extrema extrema(std::span<const double> values);

// Sum in index order.
double ordered_sum(std::span<const double> values);

}  // namespace kernels
}  // namespace haarent
