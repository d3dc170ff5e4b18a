#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "qproc/stats.hpp"

using namespace qproc::stats;

TEST_CASE("summarize anchors") {
  const std::vector<double> ones{1, 1, 1, 1};
  const auto s1 = summarize(ones);
  CHECK(s1.count == 4);
  CHECK(s1.mean == doctest::Approx(1.0));
  CHECK(s1.variance == doctest::Approx(0.0));

  const std::vector<double> two{0, 2};
  const auto s2 = summarize(two);
  CHECK(s2.mean == doctest::Approx(1.0));
  CHECK(s2.variance == doctest::Approx(2.0));
  CHECK(s2.std_error == doctest::Approx(1.0));

  const std::vector<double> one{1.0};
  CHECK_THROWS_AS(summarize(one), std::domain_error);
}

TEST_CASE("summarize is permutation-insensitive") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = dist(rng);
  const auto base = summarize(xs);
  for (int perm = 0; perm < 5; ++perm) {
    std::shuffle(xs.begin(), xs.end(), rng);
    const auto s = summarize(xs);
    CHECK(std::abs(s.mean - base.mean) <= 1e-12);
    CHECK(std::abs(s.variance - base.variance) <= 1e-12);
  }
}

TEST_CASE("ks two-sample anchors") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> a(1000);
  for (auto& x : a) x = dist(rng);

  const auto same = ks_two_sample(a, a, 0.01);
  CHECK(same.statistic == 0.0);
  CHECK(same.passed);

  std::vector<double> shifted = a;
  for (auto& x : shifted) x += 1.0;
  const auto far = ks_two_sample(a, shifted, 0.01);
  CHECK(far.statistic == doctest::Approx(1.0));
  CHECK_FALSE(far.passed);

  // Symmetry and range.
  std::vector<double> b(800);
  for (auto& x : b) x = dist(rng);
  const auto ab = ks_two_sample(a, b, 0.05);
  const auto ba = ks_two_sample(b, a, 0.05);
  CHECK(ab.statistic == ba.statistic);
  CHECK(ab.statistic >= 0.0);
  CHECK(ab.statistic <= 1.0);
  CHECK(ab.passed);  // both genuinely uniform

  const std::vector<double> empty;
  CHECK_THROWS_AS(ks_two_sample(empty, a, 0.01), std::domain_error);
  CHECK_THROWS_AS(ks_two_sample(a, b, 0.0), std::domain_error);
}

TEST_CASE("ks one-sample against uniform") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> u(20000);
  for (auto& x : u) x = dist(rng);
  CHECK(ks_uniform01(u, 0.001).passed);

  for (auto& x : u) x = 0.5 + 0.5 * x;  // clearly not uniform on (0,1)
  CHECK_FALSE(ks_uniform01(u, 0.001).passed);
}

TEST_CASE("wasserstein anchors and triangle inequality") {
  const std::vector<double> a{0.1, 0.4, 0.9};
  CHECK(wasserstein1(a, a) == 0.0);

  const std::vector<double> zeros{0, 0, 0, 0};
  const std::vector<double> cs{-2.5, -2.5, -2.5, -2.5};
  CHECK(wasserstein1(zeros, cs) == doctest::Approx(2.5));

  std::mt19937_64 rng(23);
  std::normal_distribution<double> dist(0.0, 1.0);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<double> x(64);
    std::vector<double> y(64);
    std::vector<double> z(64);
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = dist(rng);
      y[i] = dist(rng) + 0.5;
      z[i] = 2.0 * dist(rng);
    }
    const double xy = wasserstein1(x, y);
    const double yz = wasserstein1(y, z);
    const double xz = wasserstein1(x, z);
    CHECK(xz <= xy + yz + 1e-12);
  }

  const std::vector<double> shorter{0.0};
  CHECK_THROWS_AS(wasserstein1(a, shorter), std::domain_error);
}
