#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cascadia {

/// Runs body(i) for every i in [0, count) on up to `threads` workers.
/// Work is handed out through a shared counter, so callers must write
/// results into per-index slots to stay schedule independent. The first
/// exception thrown by any body is rethrown on the calling thread.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  if (count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count, std::memory_order_relaxed);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

/// Thread count from an explicit request, falling back to
/// CASCADIA_THREADS and then the hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

}  // namespace cascadia
