#include "qproc/sorter.hpp"

#include <cmath>
#include <stdexcept>

#include "qproc/tree_source.hpp"

namespace qproc::sorter {

namespace {

// k-th word of the counter-based pivot stream for this seed.
std::uint64_t pivot_word(std::uint64_t seed, std::uint64_t k) {
  return wbp::mix64(seed + (k + 1) * wbp::kGolden);
}

// Uniform rank in {1..size} by scaled multiplication (bias < 2^-52 for the
// sizes this project touches).
std::int64_t pivot_rank(std::uint64_t word, std::int64_t size) {
  const auto wide = static_cast<unsigned __int128>(word) *
                    static_cast<unsigned __int128>(size);
  return static_cast<std::int64_t>(wide >> 64) + 1;
}

}  // namespace

ComparisonTrace run_on_the_fly(std::int64_t n, const RankSource& next_rank) {
  if (n < 0) throw std::domain_error("run_on_the_fly needs n >= 0");
  ComparisonTrace trace;
  trace.n = n;
  trace.x.assign(static_cast<std::size_t>(n) + 1, 0);
  if (n <= 1) return trace;

  // Worklist of pending sublist sizes, leftmost on top. An entry of
  // kEmitPivot marks a pivot whose left sublist is exhausted; emitting it
  // costs nothing, which is what forces x[n] == x[n-1].
  constexpr std::int64_t kEmitPivot = -1;
  std::vector<std::int64_t> stack;
  stack.reserve(static_cast<std::size_t>(n));
  stack.push_back(n);

  std::uint64_t comparisons = 0;
  std::size_t emitted = 0;

  while (!stack.empty()) {
    const std::int64_t item = stack.back();
    stack.pop_back();
    if (item == kEmitPivot || item == 1) {
      trace.x[++emitted] = comparisons;
      continue;
    }
    if (item == 0) continue;

    const std::int64_t size = item;
    comparisons += static_cast<std::uint64_t>(size - 1);
    const std::int64_t rank = next_rank(size);
    if (rank < 1 || rank > size)
      throw std::domain_error("pivot rank outside {1..size}");
    // Process order: left sublist, then the pivot, then the right sublist.
    stack.push_back(size - rank);
    stack.push_back(kEmitPivot);
    stack.push_back(rank - 1);
  }
  return trace;
}

ComparisonTrace run_on_the_fly(std::int64_t n, std::uint64_t seed) {
  std::uint64_t splits = 0;
  return run_on_the_fly(n, [seed, &splits](std::int64_t size) {
    return pivot_rank(pivot_word(seed, splits++), size);
  });
}

std::string trace_csv(const ComparisonTrace& trace) {
  std::string out = "l,x\n";
  for (std::size_t l = 0; l < trace.x.size(); ++l) {
    out += std::to_string(l);
    out += ',';
    out += std::to_string(trace.x[l]);
    out += '\n';
  }
  return out;
}

NormalizedPath normalize(const ComparisonTrace& trace,
                         std::span<const double> grid,
                         const analytics::CostTables& tables) {
  if (trace.n > tables.n_cap())
    throw std::domain_error("cost tables too small for trace");
  NormalizedPath path;
  path.n = trace.n;
  path.grid.assign(grid.begin(), grid.end());
  path.values.reserve(grid.size());
  const double n = static_cast<double>(trace.n);
  for (double t : grid) {
    if (t < 0.0 || t > 1.0)
      throw std::domain_error("normalize: grid point outside [0,1]");
    if (trace.n == 0) {
      path.values.push_back(0.0);
      continue;
    }
    const auto l = static_cast<std::int64_t>(std::floor(n * t));
    const double x = static_cast<double>(trace.x[static_cast<std::size_t>(l)]);
    path.values.push_back((x - tables.a(trace.n, l)) / n);
  }
  return path;
}

}  // namespace qproc::sorter
