#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lsl {

/// Worker count from LSL_THREADS, else all hardware threads (at least 1).
int default_worker_count();

/// Resolves a requested worker count; 0 means default_worker_count().
inline int resolve_workers(int requested) {
  return requested > 0 ? requested : default_worker_count();
}

/// Calls fn(i) for i in [0, n) on up to `workers` threads. Work is handed out
/// one index at a time; callers write results into per-index slots so the
/// outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  const std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), n) - 1;
  std::vector<std::jthread> pool;
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
  body();
}

}  // namespace lsl
