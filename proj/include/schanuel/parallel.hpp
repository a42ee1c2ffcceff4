#pragma once

// Fixed work schedules over index ranges. Each index is visited exactly once;
// callers write results into per-index slots and reduce them in index order,
// so results never depend on the worker count or the schedule.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace schanuel {

enum class Partition { Block, Stride };

inline std::string to_string(Partition p) { return p == Partition::Block ? "block" : "stride"; }

/// Indices handled by worker w out of `workers`.
inline std::vector<std::size_t> schedule(std::size_t count, int workers, int w, Partition p) {
  std::vector<std::size_t> out;
  const auto W = static_cast<std::size_t>(std::max(workers, 1));
  const auto k = static_cast<std::size_t>(w);
  if (p == Partition::Stride) {
    for (std::size_t i = k; i < count; i += W) out.push_back(i);
  } else {
    const std::size_t lo = count * k / W;
    const std::size_t hi = count * (k + 1) / W;
    for (std::size_t i = lo; i < hi; ++i) out.push_back(i);
  }
  return out;
}

template <class F>
void parallel_for(std::size_t count, int workers, Partition p, F&& fn) {
  workers = std::max(workers, 1);
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (const std::size_t i : schedule(count, workers, w, p)) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& fn) {
  parallel_for(count, workers, Partition::Block, std::forward<F>(fn));
}

}  // namespace schanuel
