#pragma once

#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdvi/ensemble.hpp"

namespace sdvi::detail {

// Runs fn(k) for k in [0, count), serially or under OpenMP.  fn must write
// its result into a per-index slot; aggregation stays with the caller, in
// index order, so both policies produce bit-identical output.  The lowest
// indexed per-task exception is rethrown after all workers finish, with the
// task label and index attached.
template <typename Fn>
void for_each_index(int count, Execution exec, const char* what, Fn&& fn) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  const auto guarded = [&](int k) {
    try {
      fn(k);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  };
#ifdef SDVI_HAVE_OPENMP
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < count; ++k) guarded(k);
  } else {
    for (int k = 0; k < count; ++k) guarded(k);
  }
#else
  (void)exec;
  for (int k = 0; k < count; ++k) guarded(k);
#endif
  for (int k = 0; k < count; ++k) {
    if (errors[static_cast<std::size_t>(k)]) {
      try {
        std::rethrow_exception(errors[static_cast<std::size_t>(k)]);
      } catch (const std::exception& e) {
        throw std::runtime_error(std::string(what) + " " + std::to_string(k) + ": " + e.what());
      }
    }
  }
}

}  // namespace sdvi::detail
