#pragma once

#include <cstddef>
#include <exception>

namespace kyoung::detail {

// Runs body(i) for i in [0, n), across OpenMP threads when `parallel` is set.
// The first exception thrown by any iteration is rethrown on the caller.
template <class Body>
void parallel_for(std::ptrdiff_t n, bool parallel, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(kyoung_parallel_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace kyoung::detail
