#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace cmsym::detail {

// Smallest i < count with pred(i), or nullopt. Indices are handed out in
// increasing order, so workers stop once they pass the best hit so far and
// the answer matches the sequential scan for any worker count.
template <class Pred>
std::optional<std::uint64_t> find_first(std::uint64_t count, unsigned jobs, Pred&& pred) {
  if (jobs <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= best.load()) return;
      try {
        if (pred(i)) {
          std::uint64_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        best.store(0);
        return;
      }
    }
  };
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  const std::uint64_t hit = best.load();
  if (hit < count) return hit;
  return std::nullopt;
}

}  // namespace cmsym::detail
