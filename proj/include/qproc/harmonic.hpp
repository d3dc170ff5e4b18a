#pragma once

#include <cstdint>
#include <vector>

#include "qproc/rational.hpp"

namespace qproc::analytics {

// Exact harmonic numbers H_1..H_max with a float view. The float view is
// accumulated with compensated summation so it tracks the exact value to
// ~1e-15 relative error.
class HarmonicTable {
 public:
  explicit HarmonicTable(std::int64_t max_index);

  std::int64_t max_index() const { return max_index_; }
  const exact::Rational& exact(std::int64_t j) const;
  double value(std::int64_t j) const;

 private:
  std::int64_t max_index_;
  std::vector<exact::Rational> exact_;
  std::vector<double> float_;
};

// Float-only harmonic numbers for the large-n paths (default capacity
// contract is 1e6). Index 0 holds H_0 = 0.
class HarmonicFloat {
 public:
  explicit HarmonicFloat(std::int64_t max_index);

  std::int64_t max_index() const {
    return static_cast<std::int64_t>(values_.size()) - 1;
  }
  double operator[](std::int64_t j) const;

 private:
  std::vector<double> values_;
};

// harmonic(j) as an exact rational; j = 0 is a domain error.
exact::Rational harmonic_exact(std::int64_t j);

}  // namespace qproc::analytics
