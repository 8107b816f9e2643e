#pragma once

#include <cstddef>
#include <functional>

namespace kcp {

// Worker count for a job of the given size: min(hardware, jobs), at least 1;
// `requested` overrides hardware detection when nonzero.
unsigned worker_count(std::size_t jobs, unsigned requested = 0);

// Splits [lo, hi] into `workers` contiguous chunks and runs
// fn(chunk_index, chunk_lo, chunk_hi) on its own thread per chunk. Chunk
// boundaries depend only on (lo, hi, workers), so per-chunk results can be
// merged by chunk_index into an order independent of scheduling.
void parallel_ranges(std::size_t lo, std::size_t hi, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& fn);

} // namespace kcp
