#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace curvebraid::detail {

/// Runs fn(k) for k in [0, count) on up to `threads` workers, interleaved by index.
/// The first exception thrown by any worker is rethrown.
template <class Fn> void parallel_for(int count, int threads, Fn fn) {
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    for (int k = 0; k < count; ++k)
      fn(k);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int k = t; k < count; k += threads)
          fn(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure)
          failure = std::current_exception();
      }
    });
  }
  for (auto &th : pool)
    th.join();
  if (failure)
    std::rethrow_exception(failure);
}

} // namespace curvebraid::detail
