#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qproc::exact {

struct DivmodSmallResult;
struct DivmodResult;

// Arbitrary-precision unsigned integer, base 2^32, little-endian limbs,
// no trailing zero limbs (zero is an empty limb vector). Sized for the
// harmonic-number denominators this project needs (a few hundred bits),
// not for general-purpose bignum work.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit by design

  static BigUint from_decimal(const std::string& digits);

  bool is_zero() const { return limbs_.empty(); }
  bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }

  // <0, 0, >0 like memcmp.
  static int compare(const BigUint& a, const BigUint& b);

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return compare(a, b) == 0;
  }
  friend bool operator<(const BigUint& a, const BigUint& b) {
    return compare(a, b) < 0;
  }
  friend bool operator<=(const BigUint& a, const BigUint& b) {
    return compare(a, b) <= 0;
  }

  BigUint& operator+=(const BigUint& rhs);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  // Requires *this >= rhs.
  BigUint& operator-=(const BigUint& rhs);
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b);
  BigUint& operator*=(const BigUint& rhs) { return *this = *this * rhs; }

  // Quotient and remainder by a single 32-bit divisor (divisor != 0).
  DivmodSmallResult divmod(std::uint32_t divisor) const;

  // Knuth algorithm D; divisor must be nonzero.
  static DivmodResult divmod(const BigUint& dividend, const BigUint& divisor);

  static BigUint gcd(BigUint a, BigUint b);

  BigUint& shift_left(unsigned bits);
  BigUint& shift_right(unsigned bits);
  bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
  std::size_t bit_length() const;

  // Throws std::overflow_error when the value does not fit.
  std::uint64_t to_u64() const;
  bool fits_u64() const { return limbs_.size() <= 2; }

  // Nearest-double conversion.
  double to_double() const;

  std::string to_decimal() const;

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

struct DivmodSmallResult {
  BigUint quotient;
  std::uint32_t remainder = 0;
};

struct DivmodResult {
  BigUint quotient;
  BigUint remainder;
};

inline BigUint operator/(const BigUint& a, const BigUint& b) {
  return BigUint::divmod(a, b).quotient;
}
inline BigUint operator%(const BigUint& a, const BigUint& b) {
  return BigUint::divmod(a, b).remainder;
}

// lcm(1..n); the common denominator used by the exact expectation table.
BigUint lcm_upto(std::uint32_t n);

}  // namespace qproc::exact
