#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace thinset {

// Worker count comes from THINSET_WORKERS only; it never changes semantics,
// just how window sweeps are chunked.
inline std::size_t worker_count() {
  const char* env = std::getenv("THINSET_WORKERS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  if (v > 64) return 64;
  return static_cast<std::size_t>(v);
}

// Runs fn(begin, end) over contiguous chunks of [0, n); single-threaded when
// one worker. Callers own making fn's writes disjoint per index.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  std::size_t workers = worker_count();
  if (workers <= 1 || n < 256) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = begin + chunk < n ? begin + chunk : n;
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace thinset
