#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace starideal {

/// Worker count from STARIDEAL_THREADS (default 1, capped by the hardware).
inline unsigned thread_budget() {
  const char* env = std::getenv("STARIDEAL_THREADS");
  long n = env ? std::strtol(env, nullptr, 10) : 1;
  const long hw = std::max(1u, std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return static_cast<unsigned>(std::min(n, hw));
}

/// Calls fn(i) for i in [0, n) on up to `threads` workers.  Callers write
/// into slot i only, so results are independent of the schedule.  The first
/// exception (lowest index) is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex guard;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(guard);
        if (i < failed_at) failed_at = i, failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace starideal
