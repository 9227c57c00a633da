#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace suptail {

// Number of chunks parallel_chunks will use for a given count/thread pair.
inline unsigned chunk_count(std::uint64_t count, unsigned threads) {
  if (threads <= 1 || count < 2) return 1;
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
}

// Runs fn(chunk_index, first, last) over a chunked partition of [0, count).
// Replications must derive their randomness from their own index, so the
// partition has no effect on results; per-chunk integer outputs indexed by
// chunk_index merge into schedule-independent totals.
template <typename Fn>
void parallel_chunks(std::uint64_t count, unsigned threads, Fn&& fn) {
  const unsigned workers = chunk_count(count, threads);
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned t = 0; t < workers; ++t) {
    const std::uint64_t first = static_cast<std::uint64_t>(t) * chunk;
    const std::uint64_t last = std::min(count, first + chunk);
    if (first >= last) break;
    pool.emplace_back([&fn, t, first, last] { fn(t, first, last); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace suptail
