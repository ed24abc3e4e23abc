#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace liecurrent {

/// Worker budget: LIECURRENT_THREADS caps parallelism, 0 forces serial,
/// unset falls back to the hardware count.
inline int thread_budget() {
  const char* env = std::getenv("LIECURRENT_THREADS");
  if (env) {
    int v = std::atoi(env);
    return v <= 0 ? 1 : v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs f(0..n-1), possibly concurrently, with results merged by index so
/// output order never depends on scheduling.
template <typename F>
void parallel_for(int n, F&& f) {
  int budget = thread_budget();
  if (budget <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  int workers = std::min(budget, n);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace liecurrent
