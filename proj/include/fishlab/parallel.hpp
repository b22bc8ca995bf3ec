#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fishlab {

/// Worker count: hardware concurrency, capped by FISHLAB_THREADS when set.
std::size_t worker_count();

/// Evaluates task(i) for every i in [0, count) on a pool of worker_count()
/// threads and returns the results in index order, so the output does not
/// depend on scheduling. The first exception thrown by a task is rethrown.
/// A nonzero `threads` overrides worker_count().
template <class Task>
auto ordered_parallel_map(std::size_t count, Task task, std::size_t threads = 0)
    -> std::vector<decltype(task(std::size_t{}))> {
  using Result = decltype(task(std::size_t{}));
  std::vector<Result> results(count);
  const std::size_t workers = std::min(threads == 0 ? worker_count() : threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = task(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            results[i] = task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

/// ordered_parallel_map over tasks that each return a vector; the partial
/// results are concatenated in index order.
template <class Task>
auto ordered_parallel_concat(std::size_t count, Task task, std::size_t threads = 0)
    -> decltype(task(std::size_t{})) {
  auto parts = ordered_parallel_map(count, std::move(task), threads);
  decltype(task(std::size_t{})) merged;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  merged.reserve(total);
  for (auto& part : parts)
    for (auto& item : part) merged.push_back(std::move(item));
  return merged;
}

} // namespace fishlab
