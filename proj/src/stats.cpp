#include "qproc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qproc::stats {

StatsSummary summarize(std::span<const double> samples) {
  if (samples.size() < 2)
    throw std::domain_error("summarize needs at least two samples");
  StatsSummary s;
  double mean = 0.0;
  double m2 = 0.0;
  std::int64_t k = 0;
  for (double x : samples) {
    ++k;
    const double d = x - mean;
    mean += d / static_cast<double>(k);
    m2 += d * (x - mean);
  }
  s.count = k;
  s.mean = mean;
  s.variance = std::max(m2, 0.0) / static_cast<double>(k - 1);
  s.std_error = std::sqrt(s.variance / static_cast<double>(k));
  return s;
}

namespace {

double ks_coefficient(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("alpha must lie in (0,1)");
  return std::sqrt(-std::log(alpha / 2.0) / 2.0);
}

}  // namespace

TwoSampleResult ks_two_sample(std::span<const double> a,
                              std::span<const double> b, double alpha) {
  if (a.empty() || b.empty())
    throw std::domain_error("ks_two_sample needs nonempty samples");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());
  double stat = 0.0;
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < sa.size() && ib < sb.size()) {
    // Advance both empiricals through the smallest outstanding value so
    // ties move the two CDFs together before the gap is measured.
    const double v = std::min(sa[ia], sb[ib]);
    while (ia < sa.size() && sa[ia] == v) ++ia;
    while (ib < sb.size() && sb[ib] == v) ++ib;
    stat = std::max(stat, std::abs(static_cast<double>(ia) / na -
                                   static_cast<double>(ib) / nb));
  }
  TwoSampleResult r;
  r.statistic = stat;
  r.threshold = ks_coefficient(alpha) * std::sqrt((na + nb) / (na * nb));
  r.passed = r.statistic <= r.threshold;
  return r;
}

TwoSampleResult ks_uniform01(std::span<const double> samples, double alpha) {
  if (samples.empty()) throw std::domain_error("ks_uniform01 needs samples");
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double hi = static_cast<double>(i + 1) / n - s[i];
    const double lo = s[i] - static_cast<double>(i) / n;
    stat = std::max({stat, hi, lo});
  }
  TwoSampleResult r;
  r.statistic = stat;
  r.threshold = ks_coefficient(alpha) / std::sqrt(n);
  r.passed = r.statistic <= r.threshold;
  return r;
}

double wasserstein1(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::domain_error("wasserstein1 needs equal-length samples");
  if (a.empty()) throw std::domain_error("wasserstein1 needs nonempty samples");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) sum += std::abs(sa[i] - sb[i]);
  return sum / static_cast<double>(sa.size());
}

}  // namespace qproc::stats
