#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qproc::checks {

struct CheckResult {
  std::string check_id;
  std::string description;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double elapsed_s = 0.0;
};

// Knobs for one run of the verification suite. The acceptance preset uses
// the full scales (and enforces the stated runtime caps); desk and quick
// are the scaled-down presets behind `qproc validate [--quick]`.
struct CheckScale {
  std::int64_t exact_n_max = 150;
  std::int64_t split_n_max = 1000;

  std::vector<std::int64_t> sim_sizes{32, 128};
  std::int64_t sim_samples = 100000;

  std::vector<std::int64_t> toll_ladder{100, 1000, 10000, 100000};

  std::int64_t limitq_samples = 100000;
  std::int64_t limitq_n_star = 1 << 14;

  std::int64_t contraction_seeds = 10000;
  int contraction_m_max = 8;
  std::int64_t contraction_n_star = 1024;

  std::int64_t ks_reps = 100;
  std::int64_t ks_samples = 5000;
  std::int64_t ks_min_passes = 95;
  std::int64_t ks_n = 256;

  std::int64_t couple_samples = 2000;
  std::int64_t couple_n_lo = 64;
  std::int64_t couple_n_hi = 4096;
  std::int64_t couple_n_star = 1 << 14;
  int couple_depth = 30;

  std::int64_t center_n = 128;
  std::int64_t center_yn_samples = 100000;
  std::int64_t center_y_samples = 2000;
  std::int64_t center_n_star = 1024;
  int center_depth = 30;

  std::int64_t supnorm_samples = 1000;
  std::int64_t supnorm_n_star = 1024;
  int supnorm_depth = 30;

  int toll_grid = 1000;

  bool enforce_runtime = true;

  static CheckScale acceptance();
  static CheckScale desk();
  static CheckScale quick();
};

// Runs the whole suite in criterion order. `on_done` (when set) fires after
// each check. `corrupt_expectation` flips one DP entry before the oracle
// comparison; it exists so the failure path itself is testable.
std::vector<CheckResult> run_checks(
    const CheckScale& scale, std::uint64_t base_seed,
    const std::function<void(const CheckResult&)>& on_done = nullptr,
    bool corrupt_expectation = false);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qproc::checks
