#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace tesim {

// Runs fn(i) for i in [0,n) on up to `workers` threads. Results must be
// written to preallocated slots indexed by i so the outcome is identical
// for any worker count.
template <typename Fn>
void parallel_for(size_t n, int workers, Fn&& fn) {
  if (n == 0) return;
  size_t thread_count = std::min<size_t>(std::max(workers, 1), n);
  if (thread_count <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(thread_count);
  for (size_t t = 0; t < thread_count; ++t) {
    threads.emplace_back([t, n, thread_count, &fn]() {
      for (size_t i = t; i < n; i += thread_count) fn(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace tesim
