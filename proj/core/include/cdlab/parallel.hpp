// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cdlab {

/// Runs fn(worker, begin, end) over contiguous chunks of [0, count). Chunk
/// boundaries depend only on `count` and `workers`, so callers that merge
/// per-chunk results in chunk order get the same answer at any parallelism.
/// The first exception thrown by a worker is rethrown on the caller.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1U, workers);
  if (workers == 1 || count < 2) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  const std::size_t chunks = std::min<std::size_t>(workers, count);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t w = 0; w < chunks; ++w) {
      const std::size_t begin = count * w / chunks;
      const std::size_t end = count * (w + 1) / chunks;
      threads.emplace_back([&, w, begin, end] {
        try {
          fn(w, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, unsigned workers) {
  return (std::max(1U, workers) == 1 || count < 2) ? 1 : std::min<std::size_t>(workers, count);
}

}  // namespace cdlab
