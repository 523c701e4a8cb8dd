// This file is part of mirrorlat, a verification toolkit for flat toric
// mirror connections on root-system arrangement complements.
// Distributed under the MIT license; see LICENSE for details.

#ifndef MIRRORLAT_PARALLEL_HPP
#define MIRRORLAT_PARALLEL_HPP

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mirrorlat {

// Worker count: MIRRORLAT_THREADS if set and positive, else the hardware
// concurrency (at least 1).  Read once per call so tests can override it.
inline unsigned thread_count() {
  if (const char* env = std::getenv("MIRRORLAT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Static block partition of [0, n) across thread_count() workers.  Bodies
// must be independent; results are joined before returning.  Work items in
// this project are embarrassingly parallel (per-sample checks, grid scans).
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace mirrorlat

#endif  // MIRRORLAT_PARALLEL_HPP
