#pragma once

#include <cstdint>
#include <string>

#include "qproc/bigint.hpp"

namespace qproc::exact {

// Signed rational, always normalized: gcd(num, den) == 1, den >= 1,
// zero is stored as 0/1 with negative_ == false.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value);  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den);
  Rational(bool negative, BigUint num, BigUint den);

  static Rational zero() { return Rational(); }

  bool is_zero() const { return num_.is_zero(); }
  bool negative() const { return negative_; }
  const BigUint& num() const { return num_; }
  const BigUint& den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& r) { return *this = *this + r; }
  Rational& operator-=(const Rational& r) { return *this = *this - r; }
  Rational& operator*=(const Rational& r) { return *this = *this * r; }
  Rational& operator/=(const Rational& r) { return *this = *this / r; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.negative_ == b.negative_ && a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  // <0, 0, >0 sign of a - b.
  static int compare(const Rational& a, const Rational& b);
  friend bool operator<(const Rational& a, const Rational& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return compare(a, b) <= 0;
  }

  double to_double() const;
  // "num/den" with sign on the numerator; integers print without "/1".
  std::string to_string() const;
  std::string num_string() const;
  std::string den_string() const { return den_.to_decimal(); }

 private:
  void normalize();
  bool negative_ = false;
  BigUint num_;
  BigUint den_;
};

}  // namespace qproc::exact
