#ifndef EIRQ_EXEC_HPP
#define EIRQ_EXEC_HPP

// Sample-batch kernels. Every batch evaluation in the library goes through
// map_indices, which has an OpenMP path and a serial reference path. Each
// index writes only its own slot, so both paths produce identical results.

#include <cstddef>
#include <exception>
#include <limits>
#include <type_traits>
#include <vector>

namespace eirq {

enum class Execution { serial, parallel };

template <class F>
auto map_indices(std::size_t n, F&& f, Execution exec = Execution::parallel)
    -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> out(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  // lowest failing index wins, independent of scheduling
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Max of residuals, NaN counted as +inf. Empty input gives 0.
template <class T>
double max_residual(const std::vector<T>& values) {
  double m = 0.0;
  for (const auto& v : values) {
    const double d = static_cast<double>(v);
    if (d != d) return std::numeric_limits<double>::infinity();
    if (d > m) m = d;
  }
  return m;
}

}  // namespace eirq

#endif
