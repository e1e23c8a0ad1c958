#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace knopf {

/// Worker count: an explicit positive request wins, then KNOPF_JOBS, then 1.
inline int resolve_jobs(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KNOPF_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Runs fn(i) for i in [begin, end) on up to `jobs` threads. The first
/// exception thrown by any call is rethrown after all threads finish.
template <class F>
void parallel_for(int begin, int end, int jobs, F&& fn) {
  if (end <= begin) return;
  jobs = std::max(1, std::min(jobs, end - begin));
  if (jobs == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<int> next{begin};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < end; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace knopf
