#include "qproc/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace qproc::analytics {

using exact::Rational;

HarmonicTable::HarmonicTable(std::int64_t max_index) : max_index_(max_index) {
  if (max_index < 1) throw std::domain_error("HarmonicTable needs max_index >= 1");
  exact_.reserve(static_cast<std::size_t>(max_index));
  float_.reserve(static_cast<std::size_t>(max_index));
  Rational h(0);
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t j = 1; j <= max_index; ++j) {
    h += Rational(1, j);
    exact_.push_back(h);
    // Neumaier-compensated accumulation of 1/j.
    const double term = 1.0 / static_cast<double>(j);
    const double t = sum + term;
    comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    float_.push_back(sum + comp);
  }
}

const Rational& HarmonicTable::exact(std::int64_t j) const {
  if (j < 1 || j > max_index_) throw std::domain_error("harmonic index out of range");
  return exact_[static_cast<std::size_t>(j - 1)];
}

double HarmonicTable::value(std::int64_t j) const {
  if (j < 1 || j > max_index_) throw std::domain_error("harmonic index out of range");
  return float_[static_cast<std::size_t>(j - 1)];
}

HarmonicFloat::HarmonicFloat(std::int64_t max_index) {
  if (max_index < 0) throw std::domain_error("HarmonicFloat needs max_index >= 0");
  values_.resize(static_cast<std::size_t>(max_index) + 1);
  values_[0] = 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t j = 1; j <= max_index; ++j) {
    const double term = 1.0 / static_cast<double>(j);
    const double t = sum + term;
    comp += (sum >= term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    values_[static_cast<std::size_t>(j)] = sum + comp;
  }
}

double HarmonicFloat::operator[](std::int64_t j) const {
  if (j < 0 || j > max_index()) throw std::domain_error("harmonic index out of range");
  return values_[static_cast<std::size_t>(j)];
}

Rational harmonic_exact(std::int64_t j) {
  if (j < 1) throw std::domain_error("harmonic(j) needs j >= 1");
  Rational h(0);
  for (std::int64_t i = 1; i <= j; ++i) h += Rational(1, i);
  return h;
}

}  // namespace qproc::analytics
