#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "qproc/harmonic.hpp"
#include "qproc/rational.hpp"

namespace qproc::analytics {

// ---------------------------------------------------------------------------
// Exact expectation a(n,l) = E X(n,l)
// ---------------------------------------------------------------------------

// Dynamic-programming table for a(n,l), 0 <= l <= n <= n_max, in exact
// rational arithmetic. Internally every value is stored as an integer
// scaled by lcm(1..n_max), which keeps the recursion divisions exact and
// avoids per-step gcd reductions. This table is the independent oracle
// the closed form is checked against.
class ExpectationTable {
 public:
  explicit ExpectationTable(std::int64_t n_max);

  std::int64_t n_max() const { return n_max_; }
  exact::Rational at(std::int64_t n, std::int64_t l) const;
  double at_double(std::int64_t n, std::int64_t l) const;

  // Test hook: additively perturbs one stored entry (used to prove the
  // validation pipeline actually detects a broken table).
  void corrupt_entry(std::int64_t n, std::int64_t l);

 private:
  const exact::BigUint& scaled(std::int64_t n, std::int64_t l) const;
  std::size_t index(std::int64_t n, std::int64_t l) const;

  std::int64_t n_max_;
  exact::BigUint scale_;             // lcm(1..n_max)
  std::vector<exact::BigUint> scaled_;  // a(n,l) * scale_, triangular layout
};

// Closed form a(n,l) = 2n + 2(n+1)H_n - 2(n+3-l)H_{n+1-l} - 6l + 6 for
// 1 <= l <= n; 0 at the boundary tuples and for l = 0 (the closed form is
// not E X(n,l) at l = 0 for n >= 2). Out-of-range (n,l) is a domain error.
exact::Rational expected_cost(std::int64_t n, std::int64_t l,
                              const HarmonicTable& harmonics);

// ---------------------------------------------------------------------------
// Float-side cost tables shared by the simulator and the WBP evaluators
// ---------------------------------------------------------------------------

// Immutable float view of the closed forms, valid for 0 <= l <= n <= n_cap.
// Safe to share across threads.
class CostTables {
 public:
  explicit CostTables(std::int64_t n_cap);

  std::int64_t n_cap() const { return n_cap_; }

  // a(n,l) with the l = 0 and n <= 1 conventions applied.
  double a(std::int64_t n, std::int64_t l) const;
  // a(n,n), the plain Quicksort expectation (precomputed diagonal).
  double a_diag(std::int64_t n) const;
  // C_n(i) = (n-1 - a_n + a_{i-1} + a_{n-i}) / n, defined for n >= 2.
  double quicksort_toll(std::int64_t n, std::int64_t i) const;
  // C(n,l,i) per the I/II/III split; C(n,0,i) = 0.
  double discrete_toll(std::int64_t n, std::int64_t l, std::int64_t i) const;

 private:
  std::int64_t n_cap_;
  HarmonicFloat harmonics_;
  std::vector<double> a_diag_;
};

// ---------------------------------------------------------------------------
// Limit toll functions
// ---------------------------------------------------------------------------

// C(x) = 1 + 2x ln x + 2(1-x) ln(1-x), with 0 ln 0 = 0; x in [0,1].
double toll_limit_point(double x);

// C(t,x) = C(x) + 2*1{t<x}(-1 + x + (1-t)ln(1-t) - (1-x)ln(1-x)
//                          - (x-t)ln(x-t)); t,x in [0,1].
double toll_limit(double t, double x);

// C(n, max(floor(n t),1), ceil(n x)) for each n; requires t != x and
// t in (0,1], x in (0,1). Convergence diagnostic for the limit toll.
std::vector<double> toll_limit_of_discrete(double t, double x,
                                           const std::vector<std::int64_t>& ns);

// ---------------------------------------------------------------------------
// Moment and bound constants
// ---------------------------------------------------------------------------

// E(b(n,I_n))^2 = 2/3 - 1/n + 1/(3n^2) with b(n,i) = max(i-1, n-i)/n.
exact::Rational split_moment(std::int64_t n);
// Brute-force counterpart (1/n) sum_i b(n,i)^2, exact.
exact::Rational split_moment_enumerated(std::int64_t n);

struct BoundConstants {
  double p = 0.0;
  double k_p = 0.0;
  double q_norm_p = 0.0;
  double bound = 0.0;
};

// k_p = (2/(p+1))^{1/p}; bound = (8 + 2^{-1/p} k_p q_norm) / (1 - k_p).
// p <= 1 is a domain error (k_p degenerates to 1).
BoundConstants lp_bound(double p, double q_norm_p);

// sigma^2 = 3 * integral_0^1 C(x)^2 dx by adaptive quadrature
// (~0.4203; equals 7 - 2 pi^2 / 3).
double variance_limit();

// Adaptive Simpson quadrature with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}  // namespace qproc::analytics
