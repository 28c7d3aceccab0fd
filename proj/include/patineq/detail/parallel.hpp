#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace patineq::detail {

/// Runs `work(chunk)` for every chunk in [0, chunks) on up to `workers`
/// threads and returns the per-chunk results in chunk order, so any
/// reduction over the result is independent of the thread count.
template <typename Result, typename Work>
std::vector<Result> run_chunks(std::size_t chunks, unsigned workers, Work&& work) {
  std::vector<Result> results(chunks);
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), chunks));
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) results[c] = work(c);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t c = next++; c < chunks; c = next++) {
        try {
          results[c] = work(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace patineq::detail
