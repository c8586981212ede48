#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ringlab {

inline int hardware_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Deterministic chunked scan over the index range [0, total).
///
/// Exactly min(total, budget) indices are visited, split into chunks of
/// `chunk` consecutive indices. Each chunk fills a fresh Slot via
/// body(lo, hi, slot); merge(slot) then consumes the slots in ascending
/// chunk order. Chunk boundaries, slot contents, and merge order are all
/// independent of `workers`, so any worker count reproduces the
/// single-worker (serial reference) result bit for bit.
///
/// Returns the number of indices scanned.
template <typename Slot, typename Body, typename Merge>
std::int64_t chunked_scan(std::int64_t total, std::int64_t budget, int workers,
                          Body&& body, Merge&& merge,
                          std::int64_t chunk = std::int64_t{1} << 13) {
  const std::int64_t scanned = std::min(total, budget);
  if (scanned <= 0) return 0;
  const std::int64_t nchunks = (scanned + chunk - 1) / chunk;

#ifdef _OPENMP
  if (workers > 1 && nchunks > 1) {
    std::vector<Slot> slots(static_cast<std::size_t>(nchunks));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (std::int64_t ci = 0; ci < nchunks; ++ci) {
      const std::int64_t lo = ci * chunk;
      const std::int64_t hi = std::min(lo + chunk, scanned);
      body(lo, hi, slots[static_cast<std::size_t>(ci)]);
    }
    for (auto& s : slots) merge(std::move(s));
    return scanned;
  }
#endif
  for (std::int64_t ci = 0; ci < nchunks; ++ci) {
    const std::int64_t lo = ci * chunk;
    const std::int64_t hi = std::min(lo + chunk, scanned);
    Slot s;
    body(lo, hi, s);
    merge(std::move(s));
  }
  return scanned;
}

}  // namespace ringlab
