#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace hmr {

/// Thread count actually used for a request of `requested` (0 = hardware).
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(begin, end, worker) over contiguous chunks of [0, count).
/// Callers must make results independent of the chunking.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(count, 1)));
  if (threads <= 1) {
    body(std::uint64_t{0}, count, 0U);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = count / threads;
  const std::uint64_t extra = count % threads;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
    begin = end;
  }
}

}  // namespace hmr
