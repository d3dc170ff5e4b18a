#include "qproc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include "qproc/analytics.hpp"
#include "qproc/batch.hpp"
#include "qproc/sorter.hpp"
#include "qproc/stats.hpp"
#include "qproc/wbp.hpp"

namespace qproc::checks {

using analytics::CostTables;
using analytics::ExpectationTable;
using analytics::HarmonicTable;
using exact::Rational;
using wbp::EvalConfig;
using wbp::TreeEvaluator;
using wbp::VertexAddress;

CheckScale CheckScale::acceptance() { return CheckScale{}; }

CheckScale CheckScale::desk() {
  CheckScale s;
  s.split_n_max = 400;
  s.sim_samples = 20000;
  s.toll_ladder = {100, 1000, 10000};
  s.limitq_samples = 20000;
  s.limitq_n_star = 1 << 12;
  s.contraction_seeds = 2000;
  s.contraction_n_star = 256;
  s.ks_reps = 20;
  s.ks_samples = 2000;
  s.ks_min_passes = 17;
  s.couple_samples = 500;
  s.couple_n_hi = 1024;
  s.couple_n_star = 1 << 12;
  s.couple_depth = 24;
  s.center_yn_samples = 20000;
  s.center_y_samples = 800;
  s.center_n_star = 512;
  s.center_depth = 24;
  s.supnorm_samples = 300;
  s.supnorm_n_star = 512;
  s.toll_grid = 500;
  s.enforce_runtime = false;
  return s;
}

CheckScale CheckScale::quick() {
  CheckScale s;
  s.exact_n_max = 32;
  s.split_n_max = 100;
  s.sim_sizes = {32};
  s.sim_samples = 1000;
  s.toll_ladder = {100, 1000};
  s.limitq_samples = 1000;
  s.limitq_n_star = 1 << 10;
  s.contraction_seeds = 400;
  s.contraction_m_max = 5;
  s.contraction_n_star = 128;
  s.ks_reps = 5;
  s.ks_samples = 1000;
  s.ks_min_passes = 3;
  s.ks_n = 32;
  s.couple_samples = 200;
  s.couple_n_lo = 8;
  s.couple_n_hi = 32;
  s.couple_n_star = 1 << 10;
  s.couple_depth = 16;
  s.center_n = 32;
  s.center_yn_samples = 1000;
  s.center_y_samples = 200;
  s.center_n_star = 256;
  s.center_depth = 16;
  s.supnorm_samples = 100;
  s.supnorm_n_star = 256;
  s.supnorm_depth = 16;
  s.toll_grid = 200;
  s.enforce_runtime = false;
  return s;
}

namespace {

struct Context {
  const CheckScale& scale;
  std::uint64_t base_seed;
  bool corrupt;
  std::optional<HarmonicTable> harmonics;
  std::optional<ExpectationTable> exact_table;
  std::optional<CostTables> tables;

  std::uint64_t seed_for(std::uint64_t check, std::uint64_t stream = 0) const {
    return batch::sample_seed(base_seed, 0xC0FFEEull * check + stream);
  }

  const CostTables& cost_tables() {
    if (!tables) {
      std::int64_t cap = 2;
      const auto& s = scale;
      for (std::int64_t v :
           {s.limitq_n_star, s.contraction_n_star, s.couple_n_star,
            s.couple_n_hi, s.center_n_star, s.center_n, s.ks_n})
        cap = std::max(cap, v);
      for (std::int64_t v : s.sim_sizes) cap = std::max(cap, v);
      cap = std::max(cap, s.supnorm_n_star);
      tables.emplace(cap);
    }
    return *tables;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

EvalConfig make_config(int depth, std::int64_t n_star) {
  EvalConfig cfg;
  cfg.depth_m = depth;
  cfg.n_star = n_star;
  return cfg;
}

// --- 1. closed form vs DP oracle, exact --------------------------------

CheckResult check_exact_oracle(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "exact-oracle-equality";
  r.description = "closed form equals DP recursion as exact rationals, n <= " +
                  std::to_string(ctx.scale.exact_n_max);
  ctx.harmonics.emplace(ctx.scale.exact_n_max + 1);
  ctx.exact_table.emplace(ctx.scale.exact_n_max);
  if (ctx.corrupt) ctx.exact_table->corrupt_entry(ctx.scale.exact_n_max / 2, 1);
  std::int64_t mismatches = 0;
  for (std::int64_t n = 1; n <= ctx.scale.exact_n_max; ++n) {
    for (std::int64_t l = 1; l <= n; ++l) {
      if (!(ctx.exact_table->at(n, l) == expected_cost(n, l, *ctx.harmonics)))
        ++mismatches;
    }
  }
  r.observed = static_cast<double>(mismatches);
  r.expected = 0.0;
  r.tolerance = 0.0;
  r.elapsed_s = seconds_since(t0);
  r.passed = mismatches == 0 &&
             (!ctx.scale.enforce_runtime || r.elapsed_s < 30.0);
  return r;
}

// --- 2. boundary identities ---------------------------------------------

CheckResult check_boundaries(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "boundary-identities";
  r.description =
      "a(1,1)=0, a(n,n)=2(n+1)H_n-4n, a(n,n)=a(n,n-1) exactly, n <= " +
      std::to_string(ctx.scale.exact_n_max);
  const auto& table = *ctx.exact_table;
  const auto& harmonics = *ctx.harmonics;
  std::int64_t mismatches = 0;
  if (!(table.at(1, 1) == Rational(0))) ++mismatches;
  for (std::int64_t n = 2; n <= ctx.scale.exact_n_max; ++n) {
    const Rational qs =
        Rational(2 * (n + 1)) * harmonics.exact(n) - Rational(4 * n);
    if (!(table.at(n, n) == qs)) ++mismatches;
    if (!(table.at(n, n) == table.at(n, n - 1))) ++mismatches;
  }
  r.observed = static_cast<double>(mismatches);
  r.expected = 0.0;
  r.tolerance = 0.0;
  r.passed = mismatches == 0;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 3. simulation vs theory --------------------------------------------

CheckResult check_simulation(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "simulation-vs-theory";
  r.description = "batch mean of X(n,l) within 4 SE of a(n,l), M = " +
                  std::to_string(ctx.scale.sim_samples);
  double worst_z = 0.0;
  for (std::int64_t n : ctx.scale.sim_sizes) {
    const std::vector<std::int64_t> ls{1, std::max<std::int64_t>(n / 4, 1),
                                       std::max<std::int64_t>(n / 2, 1), n};
    const std::int64_t m = ctx.scale.sim_samples;
    std::vector<std::vector<double>> cells(
        ls.size(), std::vector<double>(static_cast<std::size_t>(m)));
    batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i) {
        const auto tr = sorter::run_on_the_fly(
            n, batch::sample_seed(ctx.seed_for(3, static_cast<std::uint64_t>(n)),
                                  static_cast<std::uint64_t>(i)));
        for (std::size_t k = 0; k < ls.size(); ++k)
          cells[k][static_cast<std::size_t>(i)] =
              static_cast<double>(tr.x[static_cast<std::size_t>(ls[k])]);
      }
    });
    for (std::size_t k = 0; k < ls.size(); ++k) {
      const auto s = stats::summarize(cells[k]);
      const double a = ctx.exact_table->at_double(n, ls[k]);
      worst_z = std::max(worst_z, std::abs(s.mean - a) / s.std_error);
    }
  }
  r.observed = worst_z;
  r.expected = 0.0;
  r.tolerance = 4.0;
  r.elapsed_s = seconds_since(t0);
  r.passed = worst_z <= 4.0 &&
             (!ctx.scale.enforce_runtime || r.elapsed_s < 120.0);
  return r;
}

// --- 4. trace structure ---------------------------------------------------

CheckResult check_traces(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "trace-structure";
  const std::int64_t n = ctx.scale.sim_sizes.back();
  r.description = "monotonicity, x[n]=x[n-1], worst-case cap on " +
                  std::to_string(ctx.scale.sim_samples) + " traces at n = " +
                  std::to_string(n);
  const std::int64_t m = ctx.scale.sim_samples;
  std::vector<std::int64_t> violations(static_cast<std::size_t>(m), 0);
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      const auto tr = sorter::run_on_the_fly(
          n, batch::sample_seed(ctx.seed_for(4), static_cast<std::uint64_t>(i)));
      std::int64_t bad = 0;
      for (std::size_t l = 1; l < tr.x.size(); ++l)
        if (tr.x[l - 1] > tr.x[l]) ++bad;
      if (tr.x[static_cast<std::size_t>(n)] !=
          tr.x[static_cast<std::size_t>(n - 1)])
        ++bad;
      if (tr.x.back() > static_cast<std::uint64_t>(n) *
                            static_cast<std::uint64_t>(n - 1) / 2)
        ++bad;
      violations[static_cast<std::size_t>(i)] = bad;
    }
  });
  std::int64_t total = 0;
  for (std::int64_t v : violations) total += v;
  r.observed = static_cast<double>(total);
  r.expected = 0.0;
  r.tolerance = 0.0;
  r.passed = total == 0;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 5. split moment -------------------------------------------------------

CheckResult check_split_moment(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "split-moment";
  r.description = "2/3 - 1/n + 1/(3n^2) equals enumeration exactly, n <= " +
                  std::to_string(ctx.scale.split_n_max);
  std::int64_t mismatches = 0;
  for (std::int64_t n = 1; n <= ctx.scale.split_n_max; ++n) {
    const Rational closed = analytics::split_moment(n);
    if (!(closed == analytics::split_moment_enumerated(n))) ++mismatches;
    if (!(closed <= Rational(2, 3))) ++mismatches;
  }
  r.observed = static_cast<double>(mismatches);
  r.expected = 0.0;
  r.tolerance = 0.0;
  r.passed = mismatches == 0;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 6. toll limit convergence ---------------------------------------------

CheckResult check_toll_convergence(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "toll-limit-convergence";
  r.description = "C(n, floor(nt), ceil(nx)) -> C(t,x) along the n ladder";
  bool ok = true;
  double observed = 0.0;
  for (auto [t, x] : {std::pair{0.3, 0.7}, std::pair{0.8, 0.2}}) {
    const auto vals = analytics::toll_limit_of_discrete(t, x, ctx.scale.toll_ladder);
    const double limit = analytics::toll_limit(t, x);
    std::vector<double> diffs;
    diffs.reserve(vals.size());
    for (double v : vals) diffs.push_back(std::abs(v - limit));
    for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
      if (diffs[k + 1] > 1.1 * diffs[k]) ok = false;  // 10% slack
    }
    for (std::size_t k = 0; k < diffs.size(); ++k) {
      if (ctx.scale.toll_ladder[k] == 10000) {
        observed = std::max(observed, diffs[k]);
        if (diffs[k] > 5e-3) ok = false;
      }
    }
  }
  r.observed = observed;
  r.expected = 0.0;
  r.tolerance = 5e-3;
  r.passed = ok;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 7. limiting variance ---------------------------------------------------

CheckResult check_limit_variance(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "limit-variance";
  r.description = "sample variance of limit_q(n_star=" +
                  std::to_string(ctx.scale.limitq_n_star) + ", M=" +
                  std::to_string(ctx.scale.limitq_samples) +
                  ") within 4 SE of 3*integral C^2";
  const auto& tables = ctx.cost_tables();
  const std::int64_t m = ctx.scale.limitq_samples;
  std::vector<double> q(static_cast<std::size_t>(m));
  const EvalConfig cfg = make_config(8, ctx.scale.limitq_n_star);
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      TreeEvaluator eval(
          {batch::sample_seed(ctx.seed_for(7), static_cast<std::uint64_t>(i))},
          cfg, tables);
      q[static_cast<std::size_t>(i)] = eval.limit_q(VertexAddress{});
    }
  });
  const auto s = stats::summarize(q);
  double m4 = 0.0;
  for (double v : q) {
    const double d = v - s.mean;
    m4 += d * d * d * d;
  }
  m4 /= static_cast<double>(m);
  const double se_var = std::sqrt(
      std::max(m4 - s.variance * s.variance *
                        (static_cast<double>(m) - 3.0) /
                        (static_cast<double>(m) - 1.0),
               0.0) /
      static_cast<double>(m));
  const double target = analytics::variance_limit();
  r.observed = std::abs(s.variance - target) / se_var;
  r.expected = 0.0;
  r.tolerance = 4.0;
  r.elapsed_s = seconds_since(t0);
  r.passed = r.observed <= 4.0 &&
             (!ctx.scale.enforce_runtime || r.elapsed_s < 300.0);
  return r;
}

// --- 8. martingale contraction ----------------------------------------------

CheckResult check_contraction(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "martingale-contraction";
  r.description = "b^2_m / b^2_{m-1} <= 0.75 for m = 1.." +
                  std::to_string(ctx.scale.contraction_m_max) + " at " +
                  std::to_string(ctx.scale.contraction_seeds) + " seeds";
  EvalConfig cfg = make_config(ctx.scale.contraction_m_max,
                               ctx.scale.contraction_n_star);
  const auto b2 =
      wbp::increment_norms(ctx.seed_for(8), ctx.scale.contraction_seeds, cfg,
                           ctx.scale.contraction_m_max, ctx.cost_tables());
  double worst = 0.0;
  for (std::size_t mlevel = 1; mlevel < b2.size(); ++mlevel) {
    if (b2[mlevel - 1] > 0.0) worst = std::max(worst, b2[mlevel] / b2[mlevel - 1]);
  }
  r.observed = worst;
  r.expected = 2.0 / 3.0;
  r.tolerance = 0.75;
  r.passed = worst <= 0.75;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 9. equality in law (Prop 4.7) -------------------------------------------

CheckResult check_equality_in_law(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "equality-in-law";
  r.description = "KS(direct Y_n(1/2), WBP Y_n(1/2)) at alpha=0.01 passes >= " +
                  std::to_string(ctx.scale.ks_min_passes) + "/" +
                  std::to_string(ctx.scale.ks_reps) + " reps, n = " +
                  std::to_string(ctx.scale.ks_n);
  const auto& tables = ctx.cost_tables();
  const std::int64_t n = ctx.scale.ks_n;
  const std::int64_t m = ctx.scale.ks_samples;
  const std::vector<double> grid{0.5};
  std::int64_t passes = 0;
  for (std::int64_t rep = 0; rep < ctx.scale.ks_reps; ++rep) {
    std::vector<double> direct(static_cast<std::size_t>(m));
    std::vector<double> via_wbp(static_cast<std::size_t>(m));
    const std::uint64_t seed_a = ctx.seed_for(9, 2 * static_cast<std::uint64_t>(rep));
    const std::uint64_t seed_b = ctx.seed_for(9, 2 * static_cast<std::uint64_t>(rep) + 1);
    batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i) {
        const auto tr = sorter::run_on_the_fly(
            n, batch::sample_seed(seed_a, static_cast<std::uint64_t>(i)));
        direct[static_cast<std::size_t>(i)] =
            sorter::normalize(tr, grid, tables).values[0];
        TreeEvaluator eval(
            {batch::sample_seed(seed_b, static_cast<std::uint64_t>(i))},
            make_config(8, 256), tables);
        via_wbp[static_cast<std::size_t>(i)] = eval.eval_discrete(0.5, n);
      }
    });
    if (stats::ks_two_sample(direct, via_wbp, 0.01).passed) ++passes;
  }
  r.observed = static_cast<double>(passes);
  r.expected = static_cast<double>(ctx.scale.ks_reps);
  r.tolerance = static_cast<double>(ctx.scale.ks_min_passes);
  r.passed = passes >= ctx.scale.ks_min_passes;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 10. coupled convergence --------------------------------------------------

CheckResult check_coupled(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "coupled-convergence";
  r.description = "D(" + std::to_string(ctx.scale.couple_n_hi) + ") < D(" +
                  std::to_string(ctx.scale.couple_n_lo) +
                  ") at t in {1/4, 1/2, 3/4}, M = " +
                  std::to_string(ctx.scale.couple_samples);
  const auto& tables = ctx.cost_tables();
  const std::vector<double> ts{0.25, 0.5, 0.75};
  const std::int64_t m = ctx.scale.couple_samples;
  const EvalConfig cfg = make_config(ctx.scale.couple_depth, ctx.scale.couple_n_star);
  // sq[t][0/1][seed]: squared coupled differences for n_lo / n_hi.
  std::vector<std::vector<std::vector<double>>> sq(
      ts.size(), std::vector<std::vector<double>>(
                     2, std::vector<double>(static_cast<std::size_t>(m))));
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      TreeEvaluator eval(
          {batch::sample_seed(ctx.seed_for(10), static_cast<std::uint64_t>(i))},
          cfg, tables);
      for (std::size_t k = 0; k < ts.size(); ++k) {
        // One tree carries the whole family: both discrete indices couple
        // against the same limit realization.
        const double limit = eval.eval_limit(ts[k]);
        const double lo = eval.eval_discrete(ts[k], ctx.scale.couple_n_lo);
        const double hi = eval.eval_discrete(ts[k], ctx.scale.couple_n_hi);
        sq[k][0][static_cast<std::size_t>(i)] = (lo - limit) * (lo - limit);
        sq[k][1][static_cast<std::size_t>(i)] = (hi - limit) * (hi - limit);
      }
    }
  });
  double worst_ratio = 0.0;
  bool ok = true;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    double d_lo = 0.0;
    double d_hi = 0.0;
    for (std::int64_t i = 0; i < m; ++i) {
      d_lo += sq[k][0][static_cast<std::size_t>(i)];
      d_hi += sq[k][1][static_cast<std::size_t>(i)];
    }
    d_lo = std::sqrt(d_lo / static_cast<double>(m));
    d_hi = std::sqrt(d_hi / static_cast<double>(m));
    if (!(d_hi < d_lo)) ok = false;
    worst_ratio = std::max(worst_ratio, d_hi / d_lo);
  }
  r.observed = worst_ratio;
  r.expected = 0.0;
  r.tolerance = 1.0;
  r.passed = ok;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 11. centering -------------------------------------------------------------

CheckResult check_centering(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "centering";
  r.description = "batch means of Y_n(t) and Y(t) within 4 SE of 0 on the "
                  "default grid";
  const auto& tables = ctx.cost_tables();
  const std::vector<double> grid = EvalConfig::default_grid();
  double worst_z = 0.0;

  {  // discrete side
    const std::int64_t n = ctx.scale.center_n;
    const std::int64_t m = ctx.scale.center_yn_samples;
    std::vector<std::vector<double>> vals(
        grid.size(), std::vector<double>(static_cast<std::size_t>(m)));
    batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i) {
        const auto tr = sorter::run_on_the_fly(
            n, batch::sample_seed(ctx.seed_for(11, 1), static_cast<std::uint64_t>(i)));
        const auto path = sorter::normalize(tr, grid, tables);
        for (std::size_t k = 0; k < grid.size(); ++k)
          vals[k][static_cast<std::size_t>(i)] = path.values[k];
      }
    });
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto s = stats::summarize(vals[k]);
      if (s.std_error > 0.0)
        worst_z = std::max(worst_z, std::abs(s.mean) / s.std_error);
      else if (s.mean != 0.0)
        worst_z = 1e9;
    }
  }

  {  // limit side
    const std::int64_t m = ctx.scale.center_y_samples;
    const EvalConfig cfg = make_config(ctx.scale.center_depth, ctx.scale.center_n_star);
    std::vector<std::vector<double>> vals(
        grid.size(), std::vector<double>(static_cast<std::size_t>(m)));
    batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
      for (std::int64_t i = b; i < e; ++i) {
        TreeEvaluator eval(
            {batch::sample_seed(ctx.seed_for(11, 2), static_cast<std::uint64_t>(i))},
            cfg, tables);
        for (std::size_t k = 0; k < grid.size(); ++k)
          vals[k][static_cast<std::size_t>(i)] = eval.eval_limit(grid[k]);
      }
    });
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const auto s = stats::summarize(vals[k]);
      worst_z = std::max(worst_z, std::abs(s.mean) / s.std_error);
    }
  }

  r.observed = worst_z;
  r.expected = 0.0;
  r.tolerance = 4.0;
  r.passed = worst_z <= 4.0;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 12. sup-norm bound ----------------------------------------------------------

CheckResult check_sup_bound(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "sup-norm-bound";
  r.description = "MC estimate of E(sup_grid R_" +
                  std::to_string(ctx.scale.supnorm_depth) +
                  ")^2 stays below the p=2 bound";
  const auto& tables = ctx.cost_tables();
  const EvalConfig cfg = make_config(ctx.scale.supnorm_depth, ctx.scale.supnorm_n_star);
  const std::int64_t m = ctx.scale.supnorm_samples;
  std::vector<double> sup_sq(static_cast<std::size_t>(m));
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      TreeEvaluator eval(
          {batch::sample_seed(ctx.seed_for(12), static_cast<std::uint64_t>(i))},
          cfg, tables);
      double sup = 0.0;
      for (double t : cfg.grid) sup = std::max(sup, std::abs(eval.eval_limit(t)));
      sup_sq[static_cast<std::size_t>(i)] = sup * sup;
    }
  });
  double mean = 0.0;
  for (double v : sup_sq) mean += v;
  mean /= static_cast<double>(m);
  const double bound =
      analytics::lp_bound(2.0, std::sqrt(analytics::variance_limit())).bound;
  r.observed = mean;
  r.expected = 0.0;
  r.tolerance = bound * bound;
  r.passed = mean < bound * bound;
  r.elapsed_s = seconds_since(t0);
  return r;
}

// --- 13. |C| <= 8 ------------------------------------------------------------------

CheckResult check_c_bound(Context& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  r.check_id = "toll-sup-bound";
  r.description = "max |C(t,x)| on a " + std::to_string(ctx.scale.toll_grid) +
                  "^2 grid is at most 8";
  const int g = ctx.scale.toll_grid;
  double sup = 0.0;
  for (int a = 0; a <= g; ++a) {
    for (int b = 0; b <= g; ++b) {
      sup = std::max(sup, std::abs(analytics::toll_limit(
                              static_cast<double>(a) / g,
                              static_cast<double>(b) / g)));
    }
  }
  r.observed = sup;
  r.expected = 0.0;
  r.tolerance = 8.0;
  r.passed = sup <= 8.0;
  r.elapsed_s = seconds_since(t0);
  return r;
}

}  // namespace

std::vector<CheckResult> run_checks(
    const CheckScale& scale, std::uint64_t base_seed,
    const std::function<void(const CheckResult&)>& on_done,
    bool corrupt_expectation) {
  Context ctx{scale, base_seed, corrupt_expectation, {}, {}, {}};
  std::vector<CheckResult> results;
  const auto push = [&](CheckResult r) {
    if (on_done) on_done(r);
    results.push_back(std::move(r));
  };
  push(check_exact_oracle(ctx));
  push(check_boundaries(ctx));
  push(check_simulation(ctx));
  push(check_traces(ctx));
  push(check_split_moment(ctx));
  push(check_toll_convergence(ctx));
  push(check_limit_variance(ctx));
  push(check_contraction(ctx));
  push(check_equality_in_law(ctx));
  push(check_coupled(ctx));
  push(check_centering(ctx));
  push(check_sup_bound(ctx));
  push(check_c_bound(ctx));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace qproc::checks
