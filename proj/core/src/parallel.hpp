#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "vconn/config.hpp"

namespace vconn::detail {

inline thread_local bool in_worker = false;

// Runs fn(i) for i in [0, count) on config().jobs workers. Callers write into
// per-index slots and reduce afterwards, so results do not depend on jobs.
// Nested calls from a worker run serially.
template <class F>
void parallel_for(int count, F&& fn) {
  const int jobs = std::min(std::max(1, config().jobs), count);
  if (jobs <= 1 || in_worker) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto worker = [&] {
    in_worker = true;
    while (true) {
      int i = next++;
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace vconn::detail
