#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mgp {

/// Runs fn(i) for i in [0, count). With workers <= 1 this is a plain loop;
/// otherwise indices are dealt round-robin to worker threads. fn must only
/// write to per-index slots so the result is independent of the schedule.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn &&fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  const unsigned used = static_cast<unsigned>(
      std::min<std::size_t>(workers, count));
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (unsigned w = 0; w < used; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += used) {
        fn(i);
      }
    });
  }
  for (auto &t : pool) {
    t.join();
  }
}

} // namespace mgp
