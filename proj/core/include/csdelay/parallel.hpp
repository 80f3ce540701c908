#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace csdelay {

/// Calls fn(i) for i in [0, n) on up to `workers` threads. Work items are
/// claimed dynamically, so fn must only write to per-index storage. The first
/// exception thrown by any item is rethrown after all threads have joined.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(std::max(1U, workers), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// Hardware concurrency with a floor of one.
inline unsigned default_workers() { return std::max(1U, std::thread::hardware_concurrency()); }

}  // namespace csdelay
