#include "qproc/wbp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qproc/batch.hpp"

namespace qproc::wbp {

std::vector<double> EvalConfig::default_grid() {
  std::vector<double> g(64);
  for (int k = 1; k <= 64; ++k) g[static_cast<std::size_t>(k - 1)] = k / 64.0;
  return g;
}

TreeEvaluator::TreeEvaluator(UniformTreeSource source, EvalConfig cfg,
                             const analytics::CostTables& tables)
    : seed_(source.seed), cfg_(std::move(cfg)), tables_(&tables) {
  if (cfg_.depth_m < 0) throw std::domain_error("depth_m must be >= 0");
  if (cfg_.n_star < 0) throw std::domain_error("n_star must be >= 0");
  if (cfg_.n_star > tables.n_cap())
    throw std::domain_error("cost tables too small for n_star");
}

double TreeEvaluator::read_uniform(const TreeCursor& cur) const {
  if (log_) log_->record(cur);
  return cur.value();
}

namespace {

// I = ceil(n U) in {1..n}; U is strictly inside (0,1) so the clamps only
// absorb float rounding at the edges.
std::int64_t pivot_index(std::int64_t n, double u) {
  auto i = static_cast<std::int64_t>(std::ceil(static_cast<double>(n) * u));
  return std::clamp<std::int64_t>(i, 1, n);
}

}  // namespace

double TreeEvaluator::discrete_q(const TreeCursor& root, std::int64_t n) const {
  if (n < 0) throw std::domain_error("discrete_q needs n >= 0");
  if (n <= 1) return 0.0;
  struct Node {
    TreeCursor cur;
    std::int64_t n;
    double weight;
  };
  double acc = 0.0;
  std::vector<Node> stack;
  stack.push_back({root, n, 1.0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const double u = read_uniform(node.cur);
    const std::int64_t i = pivot_index(node.n, u);
    const double nn = static_cast<double>(node.n);
    acc += node.weight * tables_->quicksort_toll(node.n, i);
    // Children of size <= 1 are identically zero and never read a uniform.
    if (i - 1 >= 2) {
      stack.push_back({node.cur.child(1), i - 1,
                       node.weight * static_cast<double>(i - 1) / nn});
    }
    if (node.n - i >= 2) {
      stack.push_back({node.cur.child(2), node.n - i,
                       node.weight * static_cast<double>(node.n - i) / nn});
    }
  }
  return acc;
}

double TreeEvaluator::discrete_q(const VertexAddress& v, std::int64_t n) const {
  TreeCursor cur = root_cursor();
  for (std::size_t k = 0; k < v.depth(); ++k) cur = cur.child(v.symbol(k));
  return discrete_q(cur, n);
}

double TreeEvaluator::limit_q(const TreeCursor& root) const {
  if (cfg_.n_star <= 1) return 0.0;
  if (root.key_valid()) {
    if (auto it = q_cache_.find(root.key()); it != q_cache_.end())
      return it->second;
  }
  const double value = discrete_q(root, cfg_.n_star);
  if (root.key_valid()) q_cache_.emplace(root.key(), value);
  return value;
}

double TreeEvaluator::limit_q(const VertexAddress& v) const {
  TreeCursor cur = root_cursor();
  for (std::size_t k = 0; k < v.depth(); ++k) cur = cur.child(v.symbol(k));
  return limit_q(cur);
}

double TreeEvaluator::eval_discrete(double t, std::int64_t n) const {
  if (t < 0.0 || t > 1.0)
    throw std::domain_error("eval_discrete: t outside [0,1]");
  if (n < 0) throw std::domain_error("eval_discrete needs n >= 0");
  if (n > tables_->n_cap())
    throw std::domain_error("cost tables too small for n");
  if (n <= 1) return 0.0;

  // One-sided descent: the l < I branch keeps l and moves to the left
  // child; the l >= I branch adds the finished left subtree as a coupled
  // Q value and moves to the right child with l - I. The time index stays
  // integral (l' = floor(n' t')) so no float floors are taken below the
  // root.
  auto l = static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) * t));
  double acc = 0.0;
  double weight = 1.0;
  TreeCursor cur = root_cursor();
  while (n >= 2 && l >= 1) {
    const double u = read_uniform(cur);
    const std::int64_t i = pivot_index(n, u);
    const double nn = static_cast<double>(n);
    acc += weight * tables_->discrete_toll(n, l, i);
    if (l < i) {
      if (i - 1 <= 1) break;  // A_1 factor or child process vanishes
      weight *= static_cast<double>(i - 1) / nn;
      cur = cur.child(1);
      n = i - 1;
    } else {
      if (i - 1 >= 2) {
        acc += weight * (static_cast<double>(i - 1) / nn) *
               discrete_q(cur.child(1), i - 1);
      }
      if (n - i <= 1) break;  // A_2 factor or child process vanishes
      weight *= static_cast<double>(n - i) / nn;
      cur = cur.child(2);
      l -= i;
      n -= i;
    }
  }
  return acc;
}

double TreeEvaluator::eval_limit(double t) const {
  if (!(t > 0.0 && t <= 1.0))
    throw std::domain_error("eval_limit: t outside (0,1]");
  double acc = 0.0;
  double weight = 1.0;
  double s = t;
  TreeCursor cur = root_cursor();
  for (int gen = 0; gen < cfg_.depth_m; ++gen) {
    const double u = read_uniform(cur);
    acc += weight * analytics::toll_limit(s, u);
    if (s < u) {
      weight *= u;
      s = std::min(s / u, 1.0);
      cur = cur.child(1);
    } else {
      acc += weight * u * limit_q(cur.child(1));
      weight *= 1.0 - u;
      s = std::min((s - u) / (1.0 - u), 1.0);
      cur = cur.child(2);
    }
  }
  return acc;
}

std::pair<double, double> TreeEvaluator::coupled(double t,
                                                 std::int64_t n) const {
  return {eval_discrete(t, n), eval_limit(t)};
}

std::vector<double> TreeEvaluator::limit_contributions(double t,
                                                       int levels) const {
  if (!(t > 0.0 && t <= 1.0))
    throw std::domain_error("limit_contributions: t outside (0,1]");
  std::vector<double> out(static_cast<std::size_t>(std::max(levels, 0)), 0.0);
  double weight = 1.0;
  double s = t;
  TreeCursor cur = root_cursor();
  for (int gen = 0; gen < levels; ++gen) {
    const double u = read_uniform(cur);
    double contrib = weight * analytics::toll_limit(s, u);
    if (s < u) {
      weight *= u;
      s = std::min(s / u, 1.0);
      cur = cur.child(1);
    } else {
      contrib += weight * u * limit_q(cur.child(1));
      weight *= 1.0 - u;
      s = std::min((s - u) / (1.0 - u), 1.0);
      cur = cur.child(2);
    }
    out[static_cast<std::size_t>(gen)] = contrib;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free-function wrappers
// ---------------------------------------------------------------------------

double discrete_q(UniformTreeSource src, const VertexAddress& v, std::int64_t n,
                  const analytics::CostTables& tables) {
  return TreeEvaluator(src, EvalConfig{}, tables).discrete_q(v, n);
}

double limit_q(UniformTreeSource src, const VertexAddress& v,
               const EvalConfig& cfg, const analytics::CostTables& tables) {
  return TreeEvaluator(src, cfg, tables).limit_q(v);
}

double eval_discrete_process(UniformTreeSource src, double t, std::int64_t n,
                             const analytics::CostTables& tables) {
  return TreeEvaluator(src, EvalConfig{}, tables).eval_discrete(t, n);
}

double eval_limit_process(UniformTreeSource src, double t, const EvalConfig& cfg,
                          const analytics::CostTables& tables) {
  return TreeEvaluator(src, cfg, tables).eval_limit(t);
}

std::pair<double, double> coupled_eval(UniformTreeSource src, double t,
                                       std::int64_t n, const EvalConfig& cfg,
                                       const analytics::CostTables& tables) {
  return TreeEvaluator(src, cfg, tables).coupled(t, n);
}

CadlagSample sample_discrete_process(UniformTreeSource src, std::int64_t n,
                                     const EvalConfig& cfg,
                                     const analytics::CostTables& tables) {
  TreeEvaluator eval(src, cfg, tables);
  CadlagSample sample;
  sample.grid = cfg.grid;
  sample.seed = src.seed;
  sample.n = n;
  sample.cfg = cfg;
  sample.values.reserve(cfg.grid.size());
  for (double t : cfg.grid) sample.values.push_back(eval.eval_discrete(t, n));
  return sample;
}

CadlagSample sample_limit_process(UniformTreeSource src, const EvalConfig& cfg,
                                  const analytics::CostTables& tables) {
  TreeEvaluator eval(src, cfg, tables);
  CadlagSample sample;
  sample.grid = cfg.grid;
  sample.seed = src.seed;
  sample.n = -1;
  sample.cfg = cfg;
  sample.values.reserve(cfg.grid.size());
  for (double t : cfg.grid) sample.values.push_back(eval.eval_limit(t));
  return sample;
}

std::vector<double> increment_norms(std::uint64_t base_seed,
                                    std::int64_t seed_count,
                                    const EvalConfig& cfg, int m_max,
                                    const analytics::CostTables& tables) {
  if (seed_count < 1) throw std::domain_error("increment_norms needs seeds");
  if (m_max < 0 || m_max > cfg.depth_m)
    throw std::domain_error("increment_norms needs 0 <= m_max <= depth_m");
  if (cfg.grid.empty()) throw std::domain_error("increment_norms needs a grid");
  const int levels = m_max + 1;
  // sup over the grid of |S_m(t)| per seed, squared, then averaged.
  std::vector<double> sup_sq(
      static_cast<std::size_t>(levels) * static_cast<std::size_t>(seed_count),
      0.0);
  batch::parallel_blocks(seed_count, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t s = begin; s < end; ++s) {
      UniformTreeSource src{batch::sample_seed(base_seed, static_cast<std::uint64_t>(s))};
      TreeEvaluator eval(src, cfg, tables);
      std::vector<double> sup(static_cast<std::size_t>(levels), 0.0);
      for (double t : cfg.grid) {
        const std::vector<double> contrib = eval.limit_contributions(t, levels);
        for (int m = 0; m < levels; ++m) {
          sup[static_cast<std::size_t>(m)] =
              std::max(sup[static_cast<std::size_t>(m)],
                       std::abs(contrib[static_cast<std::size_t>(m)]));
        }
      }
      for (int m = 0; m < levels; ++m) {
        sup_sq[static_cast<std::size_t>(m) * static_cast<std::size_t>(seed_count) +
               static_cast<std::size_t>(s)] =
            sup[static_cast<std::size_t>(m)] * sup[static_cast<std::size_t>(m)];
      }
    }
  });
  std::vector<double> b2(static_cast<std::size_t>(levels), 0.0);
  for (int m = 0; m < levels; ++m) {
    double sum = 0.0;
    const std::size_t row =
        static_cast<std::size_t>(m) * static_cast<std::size_t>(seed_count);
    for (std::int64_t s = 0; s < seed_count; ++s)
      sum += sup_sq[row + static_cast<std::size_t>(s)];
    b2[static_cast<std::size_t>(m)] = sum / static_cast<double>(seed_count);
  }
  return b2;
}

}  // namespace qproc::wbp
