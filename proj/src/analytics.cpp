#include "qproc/analytics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace qproc::analytics {

using exact::BigUint;
using exact::Rational;

// ---------------------------------------------------------------------------
// ExpectationTable
// ---------------------------------------------------------------------------

std::size_t ExpectationTable::index(std::int64_t n, std::int64_t l) const {
  // Triangular layout: row n starts at n(n+1)/2 and holds l = 0..n.
  return static_cast<std::size_t>(n * (n + 1) / 2 + l);
}

ExpectationTable::ExpectationTable(std::int64_t n_max) : n_max_(n_max) {
  if (n_max < 2) throw std::domain_error("ExpectationTable needs n_max >= 2");
  scale_ = exact::lcm_upto(static_cast<std::uint32_t>(n_max));
  scaled_.assign(static_cast<std::size_t>((n_max + 1) * (n_max + 2) / 2),
                 BigUint(0));

  // a(n,l) = n-1 + (1/n) [ sum_{j=1..l} (a(j-1,j-1) + a(n-j,l-j))
  //                        + sum_{j=l+1..n} a(j-1,l) ]
  // with a(0,.) = a(1,.) = 0 and a(n,0) = 0. All intermediate sums are
  // integers after scaling by lcm(1..n_max); the division by n is exact.
  for (std::int64_t n = 2; n <= n_max; ++n) {
    for (std::int64_t l = 1; l <= n; ++l) {
      BigUint sum(0);
      for (std::int64_t j = 1; j <= l; ++j) {
        sum += scaled_[index(j - 1, j - 1)];
        sum += scaled_[index(n - j, l - j)];
      }
      for (std::int64_t j = l + 1; j <= n; ++j) {
        sum += scaled_[index(j - 1, l)];
      }
      auto div = sum.divmod(static_cast<std::uint32_t>(n));
      if (div.remainder != 0)
        throw std::logic_error("expectation recursion division not exact");
      BigUint value = BigUint(static_cast<std::uint64_t>(n - 1)) * scale_;
      value += div.quotient;
      scaled_[index(n, l)] = std::move(value);
    }
  }
}

const BigUint& ExpectationTable::scaled(std::int64_t n, std::int64_t l) const {
  if (n < 0 || n > n_max_ || l < 0 || l > n)
    throw std::domain_error("expectation index out of range");
  return scaled_[index(n, l)];
}

Rational ExpectationTable::at(std::int64_t n, std::int64_t l) const {
  return Rational(false, scaled(n, l), scale_);
}

double ExpectationTable::at_double(std::int64_t n, std::int64_t l) const {
  return at(n, l).to_double();
}

void ExpectationTable::corrupt_entry(std::int64_t n, std::int64_t l) {
  scaled_[index(n, l)] += scale_;  // off by exactly +1
}

// ---------------------------------------------------------------------------
// Closed form
// ---------------------------------------------------------------------------

Rational expected_cost(std::int64_t n, std::int64_t l,
                       const HarmonicTable& harmonics) {
  if (n < 0 || l < 0 || l > n) throw std::domain_error("expected_cost: bad (n,l)");
  if (n <= 1 || l == 0) return Rational(0);
  // 2n + 2(n+1) H_n - 2(n+3-l) H_{n+1-l} - 6l + 6
  Rational value(2 * n - 6 * l + 6);
  value += Rational(2 * (n + 1)) * harmonics.exact(n);
  value -= Rational(2 * (n + 3 - l)) * harmonics.exact(n + 1 - l);
  return value;
}

// ---------------------------------------------------------------------------
// CostTables
// ---------------------------------------------------------------------------

CostTables::CostTables(std::int64_t n_cap)
    : n_cap_(n_cap), harmonics_(n_cap + 1) {
  if (n_cap < 2) throw std::domain_error("CostTables needs n_cap >= 2");
  a_diag_.resize(static_cast<std::size_t>(n_cap) + 1);
  a_diag_[0] = a_diag_[1] = 0.0;
  for (std::int64_t n = 2; n <= n_cap; ++n) {
    // a(n,n) = 2(n+1)H_n - 4n
    a_diag_[static_cast<std::size_t>(n)] =
        2.0 * static_cast<double>(n + 1) * harmonics_[n] - 4.0 * static_cast<double>(n);
  }
}

double CostTables::a(std::int64_t n, std::int64_t l) const {
  if (n < 0 || n > n_cap_ || l < 0 || l > n)
    throw std::domain_error("a(n,l) out of range");
  if (n <= 1 || l == 0) return 0.0;
  if (l == n) return a_diag_[static_cast<std::size_t>(n)];
  const double nn = static_cast<double>(n);
  const double ll = static_cast<double>(l);
  return 2.0 * nn + 2.0 * (nn + 1.0) * harmonics_[n] -
         2.0 * (nn + 3.0 - ll) * harmonics_[n + 1 - l] - 6.0 * ll + 6.0;
}

double CostTables::a_diag(std::int64_t n) const {
  if (n < 0 || n > n_cap_) throw std::domain_error("a_diag out of range");
  return a_diag_[static_cast<std::size_t>(n)];
}

double CostTables::quicksort_toll(std::int64_t n, std::int64_t i) const {
  if (n < 2 || n > n_cap_ || i < 1 || i > n)
    throw std::domain_error("quicksort_toll out of range");
  return (static_cast<double>(n - 1) - a_diag(n) + a_diag(i - 1) + a_diag(n - i)) /
         static_cast<double>(n);
}

double CostTables::discrete_toll(std::int64_t n, std::int64_t l,
                                 std::int64_t i) const {
  if (n < 2 || n > n_cap_ || i < 1 || i > n || l < 0 || l > n)
    throw std::domain_error("discrete_toll out of range");
  if (l == 0) return 0.0;
  double acc = static_cast<double>(n - 1) - a(n, l);
  if (l < i) {
    acc += a(i - 1, l);
  } else if (l == i) {
    acc += a_diag(i - 1);
  } else {
    acc += a_diag(i - 1) + a(n - i, l - i);
  }
  return acc / static_cast<double>(n);
}

// ---------------------------------------------------------------------------
// Limit tolls
// ---------------------------------------------------------------------------

namespace {
// y ln y with the 0 ln 0 = 0 convention.
double xlogx(double y) { return y <= 0.0 ? 0.0 : y * std::log(y); }
}  // namespace

double toll_limit_point(double x) {
  if (x < 0.0 || x > 1.0) throw std::domain_error("toll_limit_point: x outside [0,1]");
  return 1.0 + 2.0 * xlogx(x) + 2.0 * xlogx(1.0 - x);
}

double toll_limit(double t, double x) {
  if (t < 0.0 || t > 1.0 || x < 0.0 || x > 1.0)
    throw std::domain_error("toll_limit: argument outside [0,1]");
  double value = toll_limit_point(x);
  if (t < x) {
    value += 2.0 * (-1.0 + x + xlogx(1.0 - t) - xlogx(1.0 - x) - xlogx(x - t));
  }
  return value;
}

std::vector<double> toll_limit_of_discrete(double t, double x,
                                           const std::vector<std::int64_t>& ns) {
  if (t <= 0.0 || t > 1.0 || x <= 0.0 || x >= 1.0)
    throw std::domain_error("toll_limit_of_discrete: (t,x) out of range");
  if (t == x) throw std::domain_error("toll_limit_of_discrete requires t != x");
  std::int64_t n_cap = 2;
  for (std::int64_t n : ns) {
    if (n < 2) throw std::domain_error("toll_limit_of_discrete needs n >= 2");
    n_cap = std::max(n_cap, n);
  }
  CostTables tables(n_cap);
  std::vector<double> out;
  out.reserve(ns.size());
  for (std::int64_t n : ns) {
    const double nn = static_cast<double>(n);
    const std::int64_t l = std::max<std::int64_t>(
        static_cast<std::int64_t>(std::floor(nn * t)), 1);
    const std::int64_t i = std::min<std::int64_t>(
        static_cast<std::int64_t>(std::ceil(nn * x)), n);
    out.push_back(tables.discrete_toll(n, std::min(l, n), i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Moments and bounds
// ---------------------------------------------------------------------------

Rational split_moment(std::int64_t n) {
  if (n < 1) throw std::domain_error("split_moment needs n >= 1");
  // 2/3 - 1/n + 1/(3n^2) = (2n^2 - 3n + 1) / (3n^2)
  return Rational(2 * n * n - 3 * n + 1, 3 * n * n);
}

Rational split_moment_enumerated(std::int64_t n) {
  if (n < 1) throw std::domain_error("split_moment needs n >= 1");
  // (1/n) sum_i [ ((i-1)/n)^2 + ((n-i)/n)^2 ]. The two split weights have
  // disjoint indicator supports in the contraction argument, so the
  // squared joint weight is the sum of the squares; that sum is what the
  // closed form 2/3 - 1/n + 1/(3n^2) counts.
  BigUint sum(0);
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto left = static_cast<std::uint64_t>(i - 1);
    const auto right = static_cast<std::uint64_t>(n - i);
    sum += BigUint(left * left + right * right);
  }
  const BigUint n_big(static_cast<std::uint64_t>(n));
  return Rational(false, sum, n_big * n_big * n_big);
}

BoundConstants lp_bound(double p, double q_norm_p) {
  if (!(p > 1.0)) throw std::domain_error("lp_bound needs p > 1");
  if (q_norm_p < 0.0) throw std::domain_error("lp_bound needs q_norm_p >= 0");
  BoundConstants out;
  out.p = p;
  out.q_norm_p = q_norm_p;
  out.k_p = std::pow(2.0 / (p + 1.0), 1.0 / p);
  out.bound = (8.0 + std::pow(2.0, -1.0 / p) * out.k_p * q_norm_p) / (1.0 - out.k_p);
  return out;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                double fa, double fm, double fb, double whole, double tol,
                int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
  if (!(b > a)) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = simpson(fa, fm, fb, b - a);
  return adaptive(f, a, b, fa, fm, fb, whole, abs_tol, 48);
}

double variance_limit() {
  const auto c_sq = [](double x) {
    const double c = toll_limit_point(x);
    return c * c;
  };
  return 3.0 * integrate(c_sq, 0.0, 1.0, 1e-10);
}

}  // namespace qproc::analytics
