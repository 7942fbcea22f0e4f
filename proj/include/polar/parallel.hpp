#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace polar {

// Worker count: an explicit positive request wins, then the
// POLAR_SUBORBITS_THREADS environment variable, then hardware concurrency.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("POLAR_SUBORBITS_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(begin, end, worker) on contiguous chunks of [0, n). Chunk
// boundaries depend only on n and the worker count; callers merge per-worker
// results in worker order to stay deterministic. The first exception thrown
// by any worker is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t n, int threads, Fn fn) {
  int w = static_cast<int>(std::min<std::uint64_t>(std::max(1, threads), std::max<std::uint64_t>(n, 1)));
  if (w <= 1) {
    fn(std::uint64_t{0}, n, 0);
    return;
  }
  std::exception_ptr err;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int k = 0; k < w; ++k) {
    std::uint64_t b = n * k / w, e = n * (k + 1) / w;
    pool.emplace_back([&, b, e, k] {
      try {
        fn(b, e, k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace polar
