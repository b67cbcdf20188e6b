#ifndef KG2I_PARALLEL_H_
#define KG2I_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kg2i {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Each result lands at
// its own index, so the output order never depends on scheduling. The first
// exception thrown by any call is rethrown after all workers stop.
template <typename Fn>
auto ParallelMap(size_t n, size_t threads, Fn fn)
    -> std::vector<decltype(fn(size_t{0}))> {
  std::vector<decltype(fn(size_t{0}))> results(n);
  threads = std::max<size_t>(1, std::min(threads, n));
  if (threads == 1) {
    for (size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    while (!failed) {
      size_t i = next++;
      if (i >= n) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread &t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace kg2i

#endif  // KG2I_PARALLEL_H_
