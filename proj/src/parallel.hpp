#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace drg::detail {

/// DRG_THREADS caps parallelism; defaults to the hardware concurrency.
inline int worker_count() {
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DRG_THREADS")) {
    try {
      count = std::stoi(env);
    } catch (const std::exception&) {
      // Ignore unparsable values.
    }
  }
  return std::max(1, count);
}

/// Runs body(i) for i in [0, n) over contiguous blocks. Results must be
/// written to per-index slots so the outcome does not depend on scheduling.
template <typename Body>
void parallel_for(int n, Body&& body) {
  const int workers = std::min(worker_count(), std::max(1, n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const int block = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      try {
        const int end = std::min(n, (t + 1) * block);
        for (int i = t * block; i < end; ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& thread : threads) thread.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

}  // namespace drg::detail
