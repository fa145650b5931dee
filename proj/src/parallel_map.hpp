#pragma once

#include <exception>
#include <vector>

#include <omp.h>

namespace invtree::detail {

inline int thread_count(int jobs) { return jobs >= 1 ? jobs : omp_get_max_threads(); }

template <typename Result, typename Fn>
std::vector<Result> map_serial(std::size_t count, Fn&& fn) {
  std::vector<Result> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  return out;
}

// Results land in their own slot, so the output order never depends on
// scheduling. The first exception thrown by any iteration is rethrown.
template <typename Result, typename Fn>
std::vector<Result> map_parallel(std::size_t count, int jobs, Fn&& fn) {
  std::vector<Result> out(count);
  std::exception_ptr error;
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(jobs))
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(invtree_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace invtree::detail
