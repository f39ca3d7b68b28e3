#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace rectihull {

/// Worker count: `requested` if nonzero, else hardware concurrency; capped
/// by the RECTIHULL_THREADS environment variable when set.
[[nodiscard]] inline std::size_t thread_count(std::size_t requested = 0) {
  std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RECTIHULL_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0)
        n = std::min(n, static_cast<std::size_t>(cap));
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, n);
}

/// Calls fn(i) for i in [0, count) on up to `threads` workers. Callers
/// write results into slot i, so output never depends on scheduling. The
/// first exception thrown by any task is rethrown.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::min(std::max<std::size_t>(1, threads), std::max<std::size_t>(1, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  pool.clear();
  if (error)
    std::rethrow_exception(error);
}

} // namespace rectihull
