#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edf {

/// Worker count for grid/trial loops: machine parallelism, capped by
/// EDF_THREADS when set. Malformed or nonpositive values are ignored.
inline int thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("EDF_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v < n) n = static_cast<int>(v);
  }
  return n;
}

/// Runs body(i) for i in [begin, end). Each index writes its own result slot,
/// so the outcome is identical to the sequential loop regardless of schedule.
template <typename Fn>
void parallel_for(int begin, int end, Fn&& body) {
  const int n = end - begin;
  if (n <= 0) return;
  int workers = thread_count();
  if (workers > n) workers = n;
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<int> next{begin};
  std::exception_ptr error = nullptr;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= end) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(end);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace edf
