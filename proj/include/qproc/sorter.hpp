#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qproc/analytics.hpp"

namespace qproc::sorter {

// Cumulative comparison counts of one Quicksort-on-the-fly run:
// x[l] is the total number of comparisons made when the l-th smallest
// element is emitted; x[0] = 0.
struct ComparisonTrace {
  std::int64_t n = 0;
  std::vector<std::uint64_t> x;  // size n+1
};

// Supplies the pivot rank in {1..size} for each split, in split order.
using RankSource = std::function<std::int64_t(std::int64_t size)>;

// Runs the instrumented algorithm on rank intervals with internal
// randomness: pivot ranks come from a counter-based stream keyed by seed,
// so identical (n, seed) reproduce identical traces everywhere.
ComparisonTrace run_on_the_fly(std::int64_t n, std::uint64_t seed);

// Same algorithm with injected ranks; the exact-enumeration tests drive
// every decision path through this entry point.
ComparisonTrace run_on_the_fly(std::int64_t n, const RankSource& next_rank);

// Y_n on a time grid: values[k] = (x[floor(n g_k)] - a(n, floor(n g_k))) / n.
struct NormalizedPath {
  std::int64_t n = 0;
  std::vector<double> grid;
  std::vector<double> values;
};

NormalizedPath normalize(const ComparisonTrace& trace,
                         std::span<const double> grid,
                         const analytics::CostTables& tables);

// CSV forms of a trace: "l,x" rows for one run, "seed,l,x" for batches.
std::string trace_csv(const ComparisonTrace& trace);

}  // namespace qproc::sorter
