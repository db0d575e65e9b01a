#pragma once
// Minimal fork-join helpers. Every reduction built on top of these is
// order-independent (set union, logical and, min), so results do not
// depend on the thread count.

#include <cstdint>
#include <thread>
#include <vector>

namespace kneser {

/// 0 (or negative) selects machine parallelism.
inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1u;
}

/// Runs fn(begin, end) over contiguous chunks of [0, count).
template <typename Fn>
void parallel_chunks(std::uint64_t count, int threads, Fn&& fn) {
  if (count == 0) return;
  const std::uint64_t workers =
      std::min<std::uint64_t>(resolve_threads(threads), count);
  if (workers <= 1) {
    fn(std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t step = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t i = 0; i < workers; ++i) {
    const std::uint64_t b = i * step;
    const std::uint64_t e = std::min(b + step, count);
    if (b >= e) break;
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace kneser
