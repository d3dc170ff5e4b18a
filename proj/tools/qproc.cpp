// qproc: simulation and exact-analytics laboratory for the running time of
// Quicksort on the fly. Subcommands cover the exact expectation tables, the
// instrumented simulator, the weighted-branching-process evaluation of the
// limit process, coupled convergence diagnostics, the martingale
// contraction, and a self-check suite.
//
// Exit codes: 0 success, 1 check failure, 2 I/O failure, 3 usage/domain.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qproc/analytics.hpp"
#include "qproc/batch.hpp"
#include "qproc/checks.hpp"
#include "qproc/io.hpp"
#include "qproc/sorter.hpp"
#include "qproc/stats.hpp"
#include "qproc/wbp.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qproc;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 3;

struct Options {
  std::string n_list = "128";
  std::int64_t samples = 1000;
  std::string grid;
  int depth = 30;
  std::int64_t n_star = 1 << 14;
  int m_max = 8;
  std::uint64_t seed = 20260808;
  std::string out;
  std::string raw_out;
  std::string format = "csv";
  bool quick = false;
  bool corrupt_a = false;
};

std::vector<std::int64_t> parse_n_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::domain_error("--n needs at least one integer");
  return out;
}

std::vector<double> parse_grid(const std::string& text,
                               const std::vector<double>& fallback) {
  if (text.empty()) return fallback;
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::domain_error("--grid needs at least one value");
  std::sort(out.begin(), out.end());
  return out;
}

// Writes to the path, or stdout when the path is empty.
int emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  out << content;
  if (!out.good()) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string summary_csv(const std::vector<double>& grid,
                        const std::vector<stats::StatsSummary>& summaries,
                        const std::vector<std::int64_t>& ls) {
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"t", "l", "count", "mean", "variance", "std_error"});
  for (std::size_t k = 0; k < grid.size(); ++k) {
    csv.row({io::format_double(grid[k]), io::format_i64(ls[k]),
             io::format_i64(summaries[k].count),
             io::format_double(summaries[k].mean),
             io::format_double(summaries[k].variance),
             io::format_double(summaries[k].std_error)});
  }
  return os.str();
}

ordered_json summary_json(const std::vector<double>& grid,
                          const std::vector<stats::StatsSummary>& summaries,
                          const std::vector<std::int64_t>& ls) {
  ordered_json arr = ordered_json::array();
  for (std::size_t k = 0; k < grid.size(); ++k) {
    arr.push_back({{"t", grid[k]},
                   {"l", ls[k]},
                   {"count", summaries[k].count},
                   {"mean", summaries[k].mean},
                   {"variance", summaries[k].variance},
                   {"std_error", summaries[k].std_error}});
  }
  return arr;
}

// ---------------------------------------------------------------------------
// expectation
// ---------------------------------------------------------------------------

int cmd_expectation(const Options& opt) {
  const std::int64_t n_max = parse_n_list(opt.n_list).front();
  if (n_max < 1) throw std::domain_error("expectation needs --n >= 1");
  const analytics::HarmonicTable harmonics(n_max + 1);
  const analytics::ExpectationTable table(std::max<std::int64_t>(n_max, 2));

  bool all_match = true;
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"n", "l", "a_exact_num", "a_exact_den", "a_float", "closed_num",
              "closed_den", "match"});
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t l = 1; l <= n; ++l) {
      const exact::Rational oracle = table.at(n, l);
      const exact::Rational closed = analytics::expected_cost(n, l, harmonics);
      const bool match = oracle == closed;
      all_match = all_match && match;
      csv.row({io::format_i64(n), io::format_i64(l), oracle.num_string(),
               oracle.den_string(), io::format_double(oracle.to_double()),
               closed.num_string(), closed.den_string(), match ? "1" : "0"});
    }
  }
  const int rc = emit(opt.out, os.str());
  if (rc != kExitOk) return rc;
  return all_match ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int cmd_simulate(const Options& opt) {
  const std::int64_t n = parse_n_list(opt.n_list).front();
  if (n < 0) throw std::domain_error("simulate needs --n >= 0");
  if (opt.samples < 2) throw std::domain_error("simulate needs --samples >= 2");
  const std::vector<double> grid =
      parse_grid(opt.grid, wbp::EvalConfig::default_grid());
  for (double t : grid) {
    if (t < 0.0 || t > 1.0)
      throw std::domain_error("simulate grid points must lie in [0,1]");
  }
  const analytics::CostTables tables(std::max<std::int64_t>(n, 2));

  const std::int64_t m = opt.samples;
  std::vector<std::vector<double>> values(
      grid.size(), std::vector<double>(static_cast<std::size_t>(m)));
  std::vector<sorter::ComparisonTrace> traces;
  const bool keep_traces = !opt.raw_out.empty();
  if (keep_traces) traces.resize(static_cast<std::size_t>(m));
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      auto tr = sorter::run_on_the_fly(
          n, batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i)));
      const auto path = sorter::normalize(tr, grid, tables);
      for (std::size_t k = 0; k < grid.size(); ++k)
        values[k][static_cast<std::size_t>(i)] = path.values[k];
      if (keep_traces) traces[static_cast<std::size_t>(i)] = std::move(tr);
    }
  });

  std::vector<stats::StatsSummary> summaries;
  std::vector<std::int64_t> ls;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    summaries.push_back(stats::summarize(values[k]));
    ls.push_back(
        static_cast<std::int64_t>(std::floor(static_cast<double>(n) * grid[k])));
  }

  if (keep_traces) {
    std::ostringstream raw;
    io::CsvWriter csv(raw);
    csv.header({"seed", "l", "x"});
    for (std::int64_t i = 0; i < m; ++i) {
      const auto seed = batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i));
      const auto& tr = traces[static_cast<std::size_t>(i)];
      for (std::size_t l = 0; l < tr.x.size(); ++l) {
        csv.row({io::format_u64(seed), io::format_u64(l), io::format_u64(tr.x[l])});
      }
    }
    const int rc = emit(opt.raw_out, raw.str());
    if (rc != kExitOk) return rc;
  }

  if (opt.format == "svg") {
    std::vector<std::vector<double>> paths;
    const std::size_t shown =
        std::min<std::size_t>(static_cast<std::size_t>(m), 32);
    for (std::size_t i = 0; i < shown; ++i) {
      std::vector<double> path(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) path[k] = values[k][i];
      paths.push_back(std::move(path));
    }
    return emit(opt.out, io::svg_step_paths(grid, paths));
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["command"] = "simulate";
    doc["n"] = n;
    doc["samples"] = m;
    doc["seed"] = opt.seed;
    doc["summary"] = summary_json(grid, summaries, ls);
    return emit(opt.out, doc.dump(2) + "\n");
  }
  return emit(opt.out, summary_csv(grid, summaries, ls));
}

// ---------------------------------------------------------------------------
// limit
// ---------------------------------------------------------------------------

int cmd_limit(const Options& opt) {
  if (opt.samples < 2) throw std::domain_error("limit needs --samples >= 2");
  wbp::EvalConfig cfg;
  cfg.depth_m = opt.depth;
  cfg.n_star = opt.n_star;
  cfg.grid = parse_grid(opt.grid, wbp::EvalConfig::default_grid());
  for (double t : cfg.grid) {
    if (!(t > 0.0 && t <= 1.0)) {
      std::cerr << "error: limit process evaluated on (0,1] only\n";
      return kExitUsage;
    }
  }
  const analytics::CostTables tables(std::max<std::int64_t>(cfg.n_star, 2));

  const std::int64_t m = opt.samples;
  std::vector<std::vector<double>> values(
      cfg.grid.size(), std::vector<double>(static_cast<std::size_t>(m)));
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      wbp::TreeEvaluator eval(
          {batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i))}, cfg,
          tables);
      for (std::size_t k = 0; k < cfg.grid.size(); ++k)
        values[k][static_cast<std::size_t>(i)] = eval.eval_limit(cfg.grid[k]);
    }
  });

  if (!opt.raw_out.empty()) {
    std::ostringstream raw;
    io::CsvWriter csv(raw);
    csv.header({"seed", "t", "n", "value"});
    for (std::int64_t i = 0; i < m; ++i) {
      const auto seed = batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i));
      for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
        csv.row({io::format_u64(seed), io::format_double(cfg.grid[k]), "inf",
                 io::format_double(values[k][static_cast<std::size_t>(i)])});
      }
    }
    const int rc = emit(opt.raw_out, raw.str());
    if (rc != kExitOk) return rc;
  }

  std::vector<stats::StatsSummary> summaries;
  for (std::size_t k = 0; k < cfg.grid.size(); ++k)
    summaries.push_back(stats::summarize(values[k]));

  if (opt.format == "svg") {
    std::vector<std::vector<double>> paths;
    const std::size_t shown =
        std::min<std::size_t>(static_cast<std::size_t>(m), 32);
    for (std::size_t i = 0; i < shown; ++i) {
      std::vector<double> path(cfg.grid.size());
      for (std::size_t k = 0; k < cfg.grid.size(); ++k) path[k] = values[k][i];
      paths.push_back(std::move(path));
    }
    return emit(opt.out, io::svg_step_paths(cfg.grid, paths));
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["command"] = "limit";
    doc["depth_m"] = cfg.depth_m;
    doc["n_star"] = cfg.n_star;
    doc["samples"] = m;
    doc["seed"] = opt.seed;
    ordered_json arr = ordered_json::array();
    for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
      arr.push_back({{"t", cfg.grid[k]},
                     {"count", summaries[k].count},
                     {"mean", summaries[k].mean},
                     {"variance", summaries[k].variance},
                     {"std_error", summaries[k].std_error}});
    }
    doc["summary"] = arr;
    return emit(opt.out, doc.dump(2) + "\n");
  }

  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"t", "count", "mean", "variance", "std_error"});
  for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
    csv.row({io::format_double(cfg.grid[k]), io::format_i64(summaries[k].count),
             io::format_double(summaries[k].mean),
             io::format_double(summaries[k].variance),
             io::format_double(summaries[k].std_error)});
  }
  return emit(opt.out, os.str());
}

// ---------------------------------------------------------------------------
// couple
// ---------------------------------------------------------------------------

int cmd_couple(const Options& opt) {
  if (opt.samples < 2) throw std::domain_error("couple needs --samples >= 2");
  const std::vector<std::int64_t> ns = parse_n_list(opt.n_list);
  for (std::int64_t n : ns) {
    if (n < 2) throw std::domain_error("couple needs every n >= 2");
  }
  wbp::EvalConfig cfg;
  cfg.depth_m = opt.depth;
  cfg.n_star = opt.n_star;
  cfg.grid = parse_grid(opt.grid, {0.25, 0.5, 0.75});
  for (double t : cfg.grid) {
    if (!(t > 0.0 && t <= 1.0)) {
      std::cerr << "error: limit process evaluated on (0,1] only\n";
      return kExitUsage;
    }
  }
  if (opt.format == "svg")
    throw std::domain_error("couple does not support --format svg");
  std::int64_t cap = cfg.n_star;
  for (std::int64_t n : ns) cap = std::max(cap, n);
  const analytics::CostTables tables(cap);

  const std::int64_t m = opt.samples;
  // sq[n][t][seed] = squared coupled difference; the limit realization is
  // shared across the n list (one tree carries the whole family).
  std::vector<std::vector<std::vector<double>>> sq(
      ns.size(),
      std::vector<std::vector<double>>(
          cfg.grid.size(), std::vector<double>(static_cast<std::size_t>(m))));
  std::vector<std::vector<std::vector<double>>> pairs;
  const bool keep_pairs = !opt.raw_out.empty();
  if (keep_pairs) {
    pairs.assign(ns.size(),
                 std::vector<std::vector<double>>(
                     cfg.grid.size(),
                     std::vector<double>(static_cast<std::size_t>(2 * m))));
  }
  batch::parallel_blocks(m, [&](std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) {
      wbp::TreeEvaluator eval(
          {batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i))}, cfg,
          tables);
      for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
        const double limit = eval.eval_limit(cfg.grid[k]);
        for (std::size_t j = 0; j < ns.size(); ++j) {
          const double y = eval.eval_discrete(cfg.grid[k], ns[j]);
          sq[j][k][static_cast<std::size_t>(i)] = (y - limit) * (y - limit);
          if (keep_pairs) {
            pairs[j][k][static_cast<std::size_t>(2 * i)] = y;
            pairs[j][k][static_cast<std::size_t>(2 * i + 1)] = limit;
          }
        }
      }
    }
  });

  if (keep_pairs) {
    std::ostringstream raw;
    io::CsvWriter csv(raw);
    csv.header({"seed", "t", "n", "y_n", "y_limit", "diff"});
    for (std::int64_t i = 0; i < m; ++i) {
      const auto seed = batch::sample_seed(opt.seed, static_cast<std::uint64_t>(i));
      for (std::size_t j = 0; j < ns.size(); ++j) {
        for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
          const double y = pairs[j][k][static_cast<std::size_t>(2 * i)];
          const double ylim = pairs[j][k][static_cast<std::size_t>(2 * i + 1)];
          csv.row({io::format_u64(seed), io::format_double(cfg.grid[k]),
                   io::format_i64(ns[j]), io::format_double(y),
                   io::format_double(ylim), io::format_double(y - ylim)});
        }
      }
    }
    const int rc = emit(opt.raw_out, raw.str());
    if (rc != kExitOk) return rc;
  }

  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"n", "t", "d", "count"});
  ordered_json arr = ordered_json::array();
  for (std::size_t j = 0; j < ns.size(); ++j) {
    for (std::size_t k = 0; k < cfg.grid.size(); ++k) {
      double mean = 0.0;
      for (double v : sq[j][k]) mean += v;
      mean /= static_cast<double>(m);
      const double d = std::sqrt(mean);
      csv.row({io::format_i64(ns[j]), io::format_double(cfg.grid[k]),
               io::format_double(d), io::format_i64(m)});
      arr.push_back({{"n", ns[j]}, {"t", cfg.grid[k]}, {"d", d}, {"count", m}});
    }
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["command"] = "couple";
    doc["seed"] = opt.seed;
    doc["d"] = arr;
    return emit(opt.out, doc.dump(2) + "\n");
  }
  return emit(opt.out, os.str());
}

// ---------------------------------------------------------------------------
// contraction
// ---------------------------------------------------------------------------

int cmd_contraction(const Options& opt) {
  if (opt.samples < 1)
    throw std::domain_error("contraction needs --samples >= 1");
  if (opt.m_max < 0 || opt.m_max > opt.depth)
    throw std::domain_error("contraction needs 0 <= --m-max <= --depth");
  if (opt.format == "svg")
    throw std::domain_error("contraction does not support --format svg");
  wbp::EvalConfig cfg;
  cfg.depth_m = opt.depth;
  cfg.n_star = opt.n_star;
  cfg.grid = parse_grid(opt.grid, wbp::EvalConfig::default_grid());
  for (double t : cfg.grid) {
    if (!(t > 0.0 && t <= 1.0)) {
      std::cerr << "error: limit process evaluated on (0,1] only\n";
      return kExitUsage;
    }
  }
  const analytics::CostTables tables(std::max<std::int64_t>(cfg.n_star, 2));
  const auto b2 =
      wbp::increment_norms(opt.seed, opt.samples, cfg, opt.m_max, tables);

  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"m", "b2", "ratio"});
  ordered_json arr = ordered_json::array();
  for (std::size_t mlevel = 0; mlevel < b2.size(); ++mlevel) {
    const double ratio = mlevel == 0 ? std::numeric_limits<double>::quiet_NaN()
                                     : b2[mlevel] / b2[mlevel - 1];
    csv.row({io::format_u64(mlevel), io::format_double(b2[mlevel]),
             mlevel == 0 ? "" : io::format_double(ratio)});
    ordered_json entry{{"m", mlevel}, {"b2", b2[mlevel]}};
    if (mlevel > 0) entry["ratio"] = ratio;
    arr.push_back(entry);
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["command"] = "contraction";
    doc["seeds"] = opt.samples;
    doc["seed"] = opt.seed;
    doc["b2"] = arr;
    return emit(opt.out, doc.dump(2) + "\n");
  }
  return emit(opt.out, os.str());
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt) {
  const checks::CheckScale scale =
      opt.quick ? checks::CheckScale::quick() : checks::CheckScale::desk();
  const auto print = [](const checks::CheckResult& r) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_id
              << "  observed=" << io::format_double(r.observed)
              << " tolerance=" << io::format_double(r.tolerance) << "  ("
              << io::format_double(r.elapsed_s) << "s)\n";
    std::cout.flush();
  };
  const auto results = checks::run_checks(scale, opt.seed, print, opt.corrupt_a);

  ordered_json doc;
  doc["command"] = "validate";
  doc["quick"] = opt.quick;
  doc["seed"] = opt.seed;
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    arr.push_back({{"check_id", r.check_id},
                   {"description", r.description},
                   {"observed", r.observed},
                   {"expected", r.expected},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed}});
  }
  doc["checks"] = arr;
  doc["passed"] = checks::all_passed(results);

  if (!opt.out.empty()) {
    const int rc = emit(opt.out, doc.dump(2) + "\n");
    if (rc != kExitOk) return rc;
  }
  if (!checks::all_passed(results)) {
    for (const auto& r : results) {
      if (!r.passed) std::cerr << "failed check: " << r.check_id << "\n";
    }
    return kExitCheckFailure;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quicksort-on-the-fly process laboratory"};
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* cmd, const char* n_help) {
    cmd->add_option("--n", opt.n_list, n_help);
    cmd->add_option("--samples", opt.samples, "number of Monte-Carlo samples");
    cmd->add_option("--grid", opt.grid, "comma-separated time grid");
    cmd->add_option("--depth", opt.depth, "limit-process truncation depth");
    cmd->add_option("--n-star", opt.n_star, "discrete index approximating Q");
    cmd->add_option("--seed", opt.seed, "base seed (64-bit)");
    cmd->add_option("--out", opt.out, "output file (stdout when omitted)");
    cmd->add_option("--raw-out", opt.raw_out, "raw per-sample CSV path");
    cmd->add_option("--format", opt.format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* expectation = app.add_subcommand(
      "expectation", "exact a(n,l) table: DP oracle vs closed form");
  add_common(expectation, "table size n_max");
  auto* simulate =
      app.add_subcommand("simulate", "instrumented runs of Quicksort on the fly");
  add_common(simulate, "input size n");
  auto* limit = app.add_subcommand("limit", "sample the limit process on a grid");
  add_common(limit, "(unused for limit)");
  auto* couple =
      app.add_subcommand("couple", "coupled discrete/limit L2 distances D(n)");
  add_common(couple, "comma list of discrete sizes");
  auto* contraction =
      app.add_subcommand("contraction", "martingale increment norms b^2_m");
  add_common(contraction, "(unused for contraction)");
  contraction->add_option("--m-max", opt.m_max, "largest increment level");
  auto* validate = app.add_subcommand(
      "validate", "run the invariant suite and emit a JSON report");
  add_common(validate, "(unused for validate)");
  validate->add_flag("--quick", opt.quick,
                     "reduced scales, finishes in under a minute");
  validate
      ->add_flag("--corrupt-a", opt.corrupt_a,
                 "test hook: corrupt one expectation entry")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help/message
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (expectation->parsed()) return cmd_expectation(opt);
    if (simulate->parsed()) return cmd_simulate(opt);
    if (limit->parsed()) return cmd_limit(opt);
    if (couple->parsed()) return cmd_couple(opt);
    if (contraction->parsed()) return cmd_contraction(opt);
    if (validate->parsed()) return cmd_validate(opt);
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& err) {
    std::cerr << "I/O error: " << err.what() << "\n";
    return kExitIo;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
