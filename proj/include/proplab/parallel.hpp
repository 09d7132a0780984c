#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace proplab {

// Worker count: explicit argument > PROPERTY_LAB_JOBS > hardware concurrency.
inline int resolve_worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PROPERTY_LAB_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Partitions [0, count) into contiguous ranges and runs fn(begin, end, worker)
// on each. Caller merges per-worker results; the partition is deterministic so
// deterministic merges stay order-independent.
template <class Fn>
void parallel_ranges(std::uint64_t count, int jobs, Fn&& fn) {
  const int workers =
      static_cast<int>(std::min<std::uint64_t>(resolve_worker_count(jobs),
                                               count == 0 ? 1 : count));
  if (workers <= 1) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = count / workers;
  const std::uint64_t rest = count % workers;
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (static_cast<std::uint64_t>(w) < rest ? 1 : 0);
    pool.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    begin = end;
  }
  for (auto& t : pool) t.join();
}

}  // namespace proplab
