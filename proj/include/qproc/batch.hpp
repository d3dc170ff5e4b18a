#pragma once

#include <cstdint>
#include <functional>

namespace qproc::batch {

// Per-sample seed stream; sample i of a batch draws its own tree.
std::uint64_t sample_seed(std::uint64_t base_seed, std::uint64_t sample_index);

// Worker count: QPROC_THREADS when set (>=1), hardware concurrency otherwise.
unsigned worker_count();

// Runs fn over contiguous index blocks covering [0, count) on the worker
// pool. Partitioning depends only on count and the worker count, and
// callers write results by index, so outputs are reproducible.
void parallel_blocks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace qproc::batch
