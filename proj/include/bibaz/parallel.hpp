#pragma once

// Index-parallel map: result[i] = fn(i). Workers take contiguous blocks,
// results land at their own index, so the output never depends on the
// thread count or scheduling.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace bibaz {

inline unsigned worker_count(std::size_t jobs) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(hw, std::max<std::size_t>(jobs, 1)));
}

template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<R> out(n);
  const unsigned workers = worker_count(n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::size_t lo = n * w / workers, hi = n * (w + 1) / workers;
        try {
          for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  // lowest block first, so the surfaced error is deterministic too
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace bibaz
