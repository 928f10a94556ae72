#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

#include "subqchem/numerics.hpp"

namespace subqchem {

// Worker count honoring SUBQCHEM_THREADS (0 or 1 -> serial; unset -> hardware).
int thread_limit();

// Sums chunk_sum(i0, i1) over [begin, end) split into fixed-size chunks.
// Chunk boundaries do not depend on the worker count, and partial sums are
// combined in chunk order, so the result is bit-identical for any thread
// count including the serial baseline.
template <typename ChunkSum>
double deterministic_chunked_sum(std::int64_t begin, std::int64_t end,
                                 std::int64_t chunk, ChunkSum&& chunk_sum) {
  if (end <= begin) return 0.0;
  if (chunk < 1) chunk = 1;
  const std::int64_t n_chunks = (end - begin + chunk - 1) / chunk;
  std::vector<double> partial(static_cast<std::size_t>(n_chunks), 0.0);

  const int workers = std::min<std::int64_t>(thread_limit(), n_chunks);
  if (workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) {
      const std::int64_t i0 = begin + c * chunk;
      partial[static_cast<std::size_t>(c)] = chunk_sum(i0, std::min(end, i0 + chunk));
    }
  } else {
    std::atomic<std::int64_t> next{0};
    auto work = [&] {
      for (;;) {
        const std::int64_t c = next.fetch_add(1);
        if (c >= n_chunks) return;
        const std::int64_t i0 = begin + c * chunk;
        partial[static_cast<std::size_t>(c)] = chunk_sum(i0, std::min(end, i0 + chunk));
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  KahanSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace subqchem
