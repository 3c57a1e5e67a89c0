#ifndef EXPSUM_THREADING_HPP
#define EXPSUM_THREADING_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace expsum {

// Global cap on worker threads.  0 means "decide from hardware and the
// SZ_THREADS environment variable".  Results never depend on the thread
// count: tasks write to disjoint slots and reductions happen serially.
inline std::atomic<int>& max_threads_setting() {
  static std::atomic<int> v{0};
  return v;
}

inline void set_max_threads(int n) { max_threads_setting().store(n < 0 ? 0 : n); }

inline int effective_threads(std::size_t tasks) {
  int cap = max_threads_setting().load();
  if (cap == 0) {
    if (const char* env = std::getenv("SZ_THREADS")) {
      cap = std::atoi(env);
    }
  }
  if (cap <= 0) cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap <= 0) cap = 1;
  return static_cast<int>(std::min<std::size_t>(cap, tasks));
}

// Runs fn(i) for i in [0, count).  fn must be safe to call concurrently on
// distinct indices.  Exceptions propagate (the first one thrown wins).
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  int nthreads = effective_threads(count);
  if (nthreads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::mutex err_mutex;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace expsum

#endif  // EXPSUM_THREADING_HPP
