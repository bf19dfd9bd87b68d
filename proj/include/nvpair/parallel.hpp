#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace nvpair {

// Fixed index-range chunking. Chunk boundaries depend only on the problem
// size, never on the worker count, so per-chunk partial results merged in
// chunk order are identical for any number of workers.
inline constexpr std::size_t kChunkSize = 1 << 15;

inline std::size_t chunk_count(std::size_t n, std::size_t chunk_size = kChunkSize) {
  return (n + chunk_size - 1) / chunk_size;
}

inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Calls body(chunk, begin, end) for every chunk of [0, n). Chunks are handed
// out dynamically; body must only write to state owned by its chunk.
template <typename Body>
void for_each_chunk(std::size_t n, unsigned workers, Body&& body, std::size_t chunk_size = kChunkSize) {
  const std::size_t chunks = chunk_count(n, chunk_size);
  if (chunks == 0) return;
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::min<std::size_t>(chunks, 256)));
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      const std::size_t begin = c * chunk_size;
      body(c, begin, std::min(n, begin + chunk_size));
    }
  };
  if (workers == 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
}

}  // namespace nvpair
