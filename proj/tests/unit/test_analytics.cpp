#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qproc/analytics.hpp"

using namespace qproc::analytics;
using qproc::exact::Rational;

namespace {
const HarmonicTable& harmonics() {
  static HarmonicTable table(200);
  return table;
}
const ExpectationTable& dp_table() {
  static ExpectationTable table(60);
  return table;
}
}  // namespace

TEST_CASE("harmonic numbers, exact and float") {
  CHECK(harmonics().exact(1) == Rational(1));
  CHECK(harmonics().exact(2) == Rational(3, 2));
  for (std::int64_t j = 2; j <= 200; ++j) {
    CHECK(harmonics().exact(j) - harmonics().exact(j - 1) == Rational(1, j));
  }
  // Direct summation of six terms: 1 + 1/2 + ... + 1/6.
  CHECK(harmonics().exact(6) == Rational(49, 20));
  CHECK(harmonic_exact(6) == Rational(49, 20));
  CHECK_THROWS_AS(harmonic_exact(0), std::domain_error);
  CHECK_THROWS_AS(harmonics().exact(0), std::domain_error);

  for (std::int64_t j = 1; j <= 200; ++j) {
    const double exact = harmonics().exact(j).to_double();
    CHECK(std::abs(harmonics().value(j) - exact) <= 1e-14 * exact);
  }
  HarmonicFloat hf(100000);
  CHECK(hf[1] == 1.0);
  CHECK(hf[0] == 0.0);
  // H_n = ln n + gamma + 1/(2n) - 1/(12 n^2) + O(n^-4)
  const double asymptotic =
      std::log(1e5) + 0.5772156649015329 + 0.5e-5 - 1.0 / (12.0 * 1e10);
  CHECK(hf[100000] == doctest::Approx(asymptotic).epsilon(1e-12));
}

TEST_CASE("expected_cost closed form anchors") {
  CHECK(expected_cost(0, 0, harmonics()) == Rational(0));
  CHECK(expected_cost(1, 0, harmonics()) == Rational(0));
  CHECK(expected_cost(1, 1, harmonics()) == Rational(0));
  CHECK(expected_cost(5, 0, harmonics()) == Rational(0));  // l = 0 convention
  CHECK(expected_cost(3, 1, harmonics()) == Rational(7, 3));
  CHECK(expected_cost(3, 3, harmonics()) == Rational(8, 3));
  CHECK_THROWS_AS(expected_cost(3, 4, harmonics()), std::domain_error);
  CHECK_THROWS_AS(expected_cost(3, -1, harmonics()), std::domain_error);
}

TEST_CASE("dp oracle equals the closed form exactly up to n = 60") {
  const auto& table = dp_table();
  CHECK(table.at(2, 2) == Rational(1));
  CHECK(table.at(2, 1) == Rational(1));
  for (std::int64_t n = 0; n <= table.n_max(); ++n) {
    for (std::int64_t l = 0; l <= n; ++l) {
      if (l == 0 || n <= 1) {
        CHECK(table.at(n, l) == Rational(0));
      } else {
        CHECK(table.at(n, l) == expected_cost(n, l, harmonics()));
      }
    }
  }
}

TEST_CASE("diagonal identities: quicksort expectation") {
  for (std::int64_t n = 2; n <= 60; ++n) {
    // a(n,n) = 2(n+1)H_n - 4n
    const Rational qs = Rational(2 * (n + 1)) * harmonics().exact(n) - Rational(4 * n);
    CHECK(dp_table().at(n, n) == qs);
    CHECK(dp_table().at(n, n) == dp_table().at(n, n - 1));
  }
}

TEST_CASE("a(n,l) is nondecreasing in l") {
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t l = 2; l <= n; ++l) {
      CHECK(dp_table().at(n, l - 1) <= dp_table().at(n, l));
    }
  }
}

TEST_CASE("float cost tables track the exact table") {
  CostTables tables(60);
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t l = 0; l <= n; ++l) {
      const double exact = dp_table().at(n, l).to_double();
      CHECK(tables.a(n, l) == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("discrete toll anchors and centering") {
  CostTables tables(60);
  CHECK(tables.discrete_toll(2, 1, 1) == doctest::Approx(0.0));
  CHECK(tables.discrete_toll(2, 2, 1) == doctest::Approx(0.0));
  CHECK(tables.discrete_toll(3, 1, 2) == doctest::Approx(-1.0 / 9.0));
  CHECK(tables.discrete_toll(5, 0, 3) == 0.0);  // C(n,0,i) = 0
  CHECK_THROWS_AS(tables.discrete_toll(5, 6, 3), std::domain_error);
  CHECK_THROWS_AS(tables.discrete_toll(5, 1, 0), std::domain_error);

  // Tolls are centered: taking expectations in the split recursion forces
  // (1/n) sum_i C(n,l,i) = 0.
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t l = 1; l <= n; ++l) {
      double sum = 0.0;
      for (std::int64_t i = 1; i <= n; ++i) sum += tables.discrete_toll(n, l, i);
      CHECK(std::abs(sum / static_cast<double>(n)) <= 1e-12);
    }
  }
}

TEST_CASE("quicksort toll anchors and centering") {
  CostTables tables(200);
  CHECK(tables.quicksort_toll(2, 1) == doctest::Approx(0.0));
  CHECK(tables.quicksort_toll(2, 2) == doctest::Approx(0.0));
  // (n-1 - a_3 + a_1 + a_1)/n at n = 3, i = 2: (2 - 8/3)/3 = -2/9.
  CHECK(tables.quicksort_toll(3, 2) == doctest::Approx(-2.0 / 9.0));
  CHECK(tables.quicksort_toll(3, 1) == doctest::Approx(1.0 / 9.0));
  CHECK_THROWS_AS(tables.quicksort_toll(3, 0), std::domain_error);

  for (std::int64_t n = 2; n <= 200; ++n) {
    double sum = 0.0;
    for (std::int64_t i = 1; i <= n; ++i) sum += tables.quicksort_toll(n, i);
    CHECK(std::abs(sum / static_cast<double>(n)) <= 1e-12);
  }
}

TEST_CASE("limit toll pointwise anchors") {
  CHECK(toll_limit_point(0.5) == doctest::Approx(1.0 - 2.0 * std::log(2.0)).epsilon(1e-14));
  CHECK(toll_limit_point(0.0) == 1.0);
  CHECK(toll_limit_point(1.0) == 1.0);
  CHECK_THROWS_AS(toll_limit_point(-0.1), std::domain_error);
  CHECK_THROWS_AS(toll_limit_point(1.1), std::domain_error);

  // Indicator vanishes for t >= x.
  CHECK(toll_limit(0.9, 0.2) == toll_limit_point(0.2));
  CHECK(toll_limit(0.2, 0.2) == toll_limit_point(0.2));
  // Direct substitution, cross-checked against the discrete tolls below.
  CHECK(toll_limit(0.3, 0.7) == doctest::Approx(0.1343427424708731).epsilon(1e-9));
  CHECK_THROWS_AS(toll_limit(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(toll_limit(0.5, 1.2), std::domain_error);
}

TEST_CASE("limit toll integrates to zero") {
  const double c_mean = integrate([](double x) { return toll_limit_point(x); },
                                  0.0, 1.0, 1e-10);
  CHECK(std::abs(c_mean) <= 1e-8);
  for (double t : {0.25, 0.5, 0.75}) {
    const auto f = [t](double x) { return toll_limit(t, x); };
    const double mean = integrate(f, 0.0, t, 1e-8) + integrate(f, t, 1.0, 1e-8);
    CHECK(std::abs(mean) <= 1e-6);
  }
}

TEST_CASE("variance limit equals 7 - 2 pi^2 / 3") {
  const double v = variance_limit();
  CHECK(v >= 0.4202);
  CHECK(v <= 0.4204);
  const double analytic = 7.0 - 2.0 * std::numbers::pi * std::numbers::pi / 3.0;
  CHECK(std::abs(v - analytic) <= 1e-7);
  // Degenerate toll: the same quadrature on an identically-zero integrand.
  CHECK(3.0 * integrate([](double) { return 0.0; }, 0.0, 1.0, 1e-10) == 0.0);
}

TEST_CASE("limit toll is bounded by 8 on a grid") {
  double sup = 0.0;
  for (int a = 0; a <= 200; ++a) {
    for (int b = 0; b <= 200; ++b) {
      sup = std::max(sup, std::abs(toll_limit(a / 200.0, b / 200.0)));
    }
  }
  CHECK(sup <= 8.0);
}

TEST_CASE("discrete tolls converge to the limit toll") {
  const std::vector<std::int64_t> ns{100, 1000, 10000};
  for (auto [t, x] : {std::pair{0.3, 0.7}, std::pair{0.8, 0.2}}) {
    const auto vals = toll_limit_of_discrete(t, x, ns);
    const double limit = toll_limit(t, x);
    CHECK(std::abs(vals[2] - limit) <= 5e-3);
    CHECK(std::abs(vals[2] - limit) <= std::abs(vals[0] - limit));
  }
  CHECK_THROWS_AS(toll_limit_of_discrete(0.5, 0.5, {10}), std::domain_error);
  CHECK_THROWS_AS(toll_limit_of_discrete(0.5, 0.7, {1}), std::domain_error);
}

TEST_CASE("split moment closed form vs enumeration") {
  CHECK(split_moment(1) == Rational(0));
  CHECK(split_moment(2) == Rational(1, 4));
  for (std::int64_t n = 1; n <= 300; ++n) {
    CHECK(split_moment(n) == split_moment_enumerated(n));
    CHECK(split_moment(n) <= Rational(2, 3));
  }
}

TEST_CASE("lp bound constants") {
  const auto b0 = lp_bound(2.0, 0.0);
  CHECK(b0.k_p == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(b0.bound == doctest::Approx(8.0 / (1.0 - std::sqrt(2.0 / 3.0))).epsilon(1e-14));
  CHECK(b0.bound == doctest::Approx(43.60).epsilon(1e-3));

  const auto b1 = lp_bound(2.0, 0.648);
  CHECK(b1.bound == doctest::Approx(45.6).epsilon(2e-3));

  // k_p -> 1 and the bound blows up as p -> infinity (and as p -> 1+).
  CHECK(lp_bound(256.0, 1.0).k_p > 0.98);
  CHECK(lp_bound(256.0, 1.0).bound > lp_bound(16.0, 1.0).bound);
  CHECK(lp_bound(4096.0, 1.0).bound > lp_bound(256.0, 1.0).bound);
  CHECK(lp_bound(1.001, 1.0).bound > 1e3);
  for (double p : {1.5, 2.0, 4.0, 16.0, 256.0}) {
    const auto b = lp_bound(p, 1.0);
    CHECK(b.k_p > 0.0);
    CHECK(b.k_p < 1.0);
  }
  CHECK_THROWS_AS(lp_bound(1.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(lp_bound(0.5, 0.0), std::domain_error);
}

TEST_CASE("expectation table rejects out-of-range queries") {
  CHECK_THROWS_AS(dp_table().at(61, 1), std::domain_error);
  CHECK_THROWS_AS(dp_table().at(5, 6), std::domain_error);
  CHECK_THROWS_AS(dp_table().at(-1, 0), std::domain_error);
}
