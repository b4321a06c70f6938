#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace homolink {

// Worker count: HOMOLINK_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t default_thread_count();

// Runs body(i) for i in [0, count) on up to `threads` workers. Iterations
// must be independent. The first exception thrown by any iteration is
// rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t threads = default_thread_count()) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n = threads < count ? threads : count;
  pool.reserve(n);
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace homolink
