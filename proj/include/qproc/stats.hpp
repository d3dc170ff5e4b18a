#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qproc::stats {

struct StatsSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;   // unbiased
  double std_error = 0.0;  // sqrt(variance / count)
};

// One-pass Welford mean/variance. Needs at least two samples.
StatsSummary summarize(std::span<const double> samples);

struct TwoSampleResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed = false;  // statistic <= threshold
};

// Two-sample Kolmogorov-Smirnov with the asymptotic threshold
// c(alpha) sqrt((n_a+n_b)/(n_a n_b)), c(alpha) = sqrt(-ln(alpha/2)/2).
TwoSampleResult ks_two_sample(std::span<const double> a,
                              std::span<const double> b, double alpha);

// One-sample KS against Uniform(0,1), same asymptotic threshold scaled
// by 1/sqrt(n). Used for the seeded-tree uniformity contract.
TwoSampleResult ks_uniform01(std::span<const double> samples, double alpha);

// W1 distance between equal-length empirical samples:
// (1/n) sum |a_(i) - b_(i)| over the sorted samples.
double wasserstein1(std::span<const double> a, std::span<const double> b);

}  // namespace qproc::stats
