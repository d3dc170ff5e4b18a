#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qproc/analytics.hpp"
#include "qproc/tree_source.hpp"

namespace qproc::wbp {

// Truncation and approximation parameters for the limit-process evaluators.
// depth_m is the generation the tree sum is cut at; n_star is the discrete
// index whose coupled value stands in for the limit Quicksort variable Q.
struct EvalConfig {
  int depth_m = 30;
  std::int64_t n_star = 1 << 14;
  std::vector<double> grid = default_grid();

  static std::vector<double> default_grid();  // dyadic k/64, k = 1..64
};

// One realization of a process on a finite time grid.
struct CadlagSample {
  std::vector<double> grid;
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::int64_t n = -1;  // -1 marks the limit process
  EvalConfig cfg;
};

// Evaluates the coupled discrete and limit processes on one seeded tree.
// Every operation is a pure function of (seed, arguments); the only mutable
// state is the memo cache for limit_q values, which is deterministic, so
// the evaluator stays safe to use from one thread and cheap to recreate
// per worker.
class TreeEvaluator {
 public:
  TreeEvaluator(UniformTreeSource source, EvalConfig cfg,
                const analytics::CostTables& tables);

  const EvalConfig& config() const { return cfg_; }
  std::uint64_t seed() const { return seed_; }

  // Q_n at the subtree rooted at the cursor; exact finite recursion.
  double discrete_q(const TreeCursor& root, std::int64_t n) const;
  double discrete_q(const VertexAddress& v, std::int64_t n) const;

  // Limit Quicksort variable at a vertex, approximated by the coupled
  // discrete value at n_star (memoized per address).
  double limit_q(const TreeCursor& root) const;
  double limit_q(const VertexAddress& v) const;

  // Y_n(t) via the coupled tree weights; exact, no truncation.
  double eval_discrete(double t, std::int64_t n) const;

  // Y(t) truncated at depth_m; rejects t = 0.
  double eval_limit(double t) const;

  // (Y_n(t), Y(t)) on the same tree.
  std::pair<double, double> coupled(double t, std::int64_t n) const;

  // Per-generation contributions of the limit descent at time t:
  // out[m] = R_{m+1}(t) - R_m(t) for m = 0..levels-1.
  std::vector<double> limit_contributions(double t, int levels) const;

  // Test hook: records the address of every uniform consumed.
  void attach_log(AddressLog* log) { log_ = log; }

 private:
  TreeCursor root_cursor() const { return TreeCursor(seed_); }
  double read_uniform(const TreeCursor& cur) const;

  std::uint64_t seed_;
  EvalConfig cfg_;
  const analytics::CostTables* tables_;
  mutable std::unordered_map<AddrKey, double, AddrKeyHash> q_cache_;
  AddressLog* log_ = nullptr;
};

// Free-function convenience wrappers; each builds a throwaway evaluator.
double discrete_q(UniformTreeSource src, const VertexAddress& v, std::int64_t n,
                  const analytics::CostTables& tables);
double limit_q(UniformTreeSource src, const VertexAddress& v,
               const EvalConfig& cfg, const analytics::CostTables& tables);
double eval_discrete_process(UniformTreeSource src, double t, std::int64_t n,
                             const analytics::CostTables& tables);
double eval_limit_process(UniformTreeSource src, double t, const EvalConfig& cfg,
                          const analytics::CostTables& tables);
std::pair<double, double> coupled_eval(UniformTreeSource src, double t,
                                       std::int64_t n, const EvalConfig& cfg,
                                       const analytics::CostTables& tables);

// One full-path realization per process on the configured grid.
CadlagSample sample_discrete_process(UniformTreeSource src, std::int64_t n,
                                     const EvalConfig& cfg,
                                     const analytics::CostTables& tables);
CadlagSample sample_limit_process(UniformTreeSource src, const EvalConfig& cfg,
                                  const analytics::CostTables& tables);

// Monte-Carlo estimates of b_m^2 = E sup_{t in grid} (R_{m+1}(t)-R_m(t))^2
// for m = 0..m_max, averaged over seed_count trees (seeds derived from
// base_seed). Parallelizes over seeds; the reduction is in seed order.
std::vector<double> increment_norms(std::uint64_t base_seed,
                                    std::int64_t seed_count,
                                    const EvalConfig& cfg, int m_max,
                                    const analytics::CostTables& tables);

}  // namespace qproc::wbp
