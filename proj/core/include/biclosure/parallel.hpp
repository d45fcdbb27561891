#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace biclosure {

/// Worker count for catalog sweeps: BICLOSURE_THREADS when set to a positive
/// integer, otherwise the hardware concurrency.
inline std::size_t sweep_threads() {
  std::size_t n = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BICLOSURE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) n = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return n;
}

/// Evaluates fn(i) for i in [0, count) on up to `threads` workers and returns
/// the results in index order. The first exception thrown by any item is
/// rethrown after all workers stop.
template <typename Fn>
auto parallel_map(std::size_t count, Fn&& fn, std::size_t threads = sweep_threads())
    -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };

  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace biclosure
