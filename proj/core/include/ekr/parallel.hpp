#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ekr {

inline unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into contiguous chunks and calls body(chunk, begin, end)
// for each, one chunk per worker. Chunk boundaries depend only on count and
// workers, so per-chunk results can be reduced in chunk order.
template <typename Body>
void parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  const std::size_t step = (count + workers - 1) / workers;
  if (workers == 1) {
    body(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step);
    const std::size_t end = std::min(count, begin + step);
    threads.emplace_back([&body, w, begin, end] { body(w, begin, end); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace ekr
