#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <vector>

namespace logcert {

/// Worker cap from LOGCERT_THREADS (0 or unset = hardware concurrency).
std::size_t worker_count();

/// Runs the tasks with at most worker_count() in flight and returns their
/// results in task order, independent of completion order.
template <class T>
std::vector<T> run_all(const std::vector<std::function<T()>>& tasks) {
  std::vector<T> results;
  results.reserve(tasks.size());
  const std::size_t width = worker_count();
  if (width <= 1) {
    for (const auto& t : tasks) results.push_back(t());
    return results;
  }
  for (std::size_t start = 0; start < tasks.size(); start += width) {
    std::vector<std::future<T>> batch;
    for (std::size_t i = start; i < tasks.size() && i < start + width; ++i) {
      batch.push_back(std::async(std::launch::async, tasks[i]));
    }
    for (auto& f : batch) results.push_back(f.get());
  }
  return results;
}

}  // namespace logcert
