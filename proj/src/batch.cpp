#include "qproc/batch.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "qproc/tree_source.hpp"

namespace qproc::batch {

std::uint64_t sample_seed(std::uint64_t base_seed, std::uint64_t sample_index) {
  return wbp::mix64(base_seed ^ sample_index);
}

unsigned worker_count() {
  if (const char* env = std::getenv("QPROC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_blocks(std::int64_t count,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  const std::int64_t workers =
      std::min<std::int64_t>(worker_count(), count);
  if (workers == 1) {
    fn(0, count);
    return;
  }
  const std::int64_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (std::int64_t w = 0; w < workers; ++w) {
    const std::int64_t begin = w * chunk;
    const std::int64_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace qproc::batch
