#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace globvert {

/// Worker count: GLOBVERT_THREADS caps it, hardware_concurrency otherwise.
inline int thread_budget() {
  if (const char* env = std::getenv("GLOBVERT_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs body(begin, end) over disjoint chunks of [0, n). Workers must only write
/// to slots of their own range so results cannot depend on the chunking.
inline void parallel_for(int n, const std::function<void(int, int)>& body) {
  int threads = std::min(thread_budget(), n);
  if (threads <= 1 || n < 128) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    int begin = t * chunk;
    int end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace globvert
