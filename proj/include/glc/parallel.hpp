#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace glc {

/// Resolves a user thread count: 0 means all hardware threads.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Scans [0, count) in contiguous chunks. `scan(begin, end)` returns the
/// smallest failing index inside its range, if any. The overall answer is the
/// smallest failing index over the whole space, independent of scheduling:
/// workers skip chunks that start after the best failure found so far, and
/// chunks are claimed in increasing order.
inline std::optional<std::uint64_t> first_failure(
    std::uint64_t count, int threads, std::uint64_t chunk,
    const std::function<std::optional<std::uint64_t>(std::uint64_t, std::uint64_t)>& scan) {
  if (count == 0) return std::nullopt;
  chunk = std::max<std::uint64_t>(chunk, 1);
  threads = std::max(1, resolve_threads(threads));
  if (threads == 1 || count <= chunk) {
    for (std::uint64_t b = 0; b < count; b += chunk) {
      if (auto hit = scan(b, std::min(count, b + chunk))) return hit;
    }
    return std::nullopt;
  }

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNone};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(chunk);
      if (b >= count || b >= best.load()) return;
      if (auto hit = scan(b, std::min(count, b + chunk))) {
        std::uint64_t cur = best.load();
        while (*hit < cur && !best.compare_exchange_weak(cur, *hit)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  const std::uint64_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

/// Runs body(i) for every i in [0, count) across `threads` workers.
inline void parallel_for(std::uint64_t count, int threads, const std::function<void(std::uint64_t)>& body) {
  threads = std::max(1, resolve_threads(threads));
  if (threads == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < count;) body(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace glc
