#pragma once

#include <cstddef>

#include "dini/grid_eval.hpp"

namespace dini::detail {

/// f(i) for i in [0, n). Parallel runs use dynamic scheduling; f must not throw.
template <class F>
void for_each_index(std::size_t n, Execution execution, F&& f) {
  if (execution == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (long i = 0; i < count; ++i) f(static_cast<std::size_t>(i));
}

}  // namespace dini::detail
