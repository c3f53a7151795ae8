#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace arbcycle::detail {

// Runs fn(row) for every row in [0, n). Rows are independent, so the result
// does not depend on how many workers pick them up.
template <class Fn>
void parallel_rows(std::size_t n, Fn&& fn, std::size_t min_rows_per_worker = 32) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, n / std::max<std::size_t>(1, min_rows_per_worker));
  if (workers <= 1) {
    for (std::size_t r = 0; r < n; ++r) fn(r);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t r = next++; r < n; r = next++) fn(r);
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(drain);
  drain();
}

}  // namespace arbcycle::detail
