#pragma once

#include <exception>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jordan {

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, count); each index is independent, results land in
// caller-owned slots so the aggregation order never depends on the schedule.
template <class Fn>
void parallel_for(int count, Fn&& fn, bool parallel = true) {
#ifdef _OPENMP
  if (parallel && count > 1) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < count; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  (void)parallel;
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace jordan
