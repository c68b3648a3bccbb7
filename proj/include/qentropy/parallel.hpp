#pragma once

#include <cstddef>
#include <cstdint>

namespace qentropy {

/// How a batch of independent trials is executed. `serial` is the reference
/// path; both must produce identical per-trial results.
enum class Execution { serial, parallel };

/// Calls fn(i) for i in [0, n). fn must not throw and must only write to
/// storage owned by index i.
template <class Fn>
void for_each_trial(std::size_t n, Execution ex, Fn&& fn) {
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

/// Worker threads available to the parallel path (1 without OpenMP).
int max_threads();

}  // namespace qentropy
