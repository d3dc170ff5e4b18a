#include "qproc/rational.hpp"

#include <stdexcept>
#include <utility>

namespace qproc::exact {

namespace {
std::uint64_t abs_u64(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}
}  // namespace

Rational::Rational(std::int64_t value)
    : negative_(value < 0), num_(abs_u64(value)), den_(1) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : negative_((num < 0) != (den < 0) && num != 0),
      num_(abs_u64(num)),
      den_(abs_u64(den)) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

Rational::Rational(bool negative, BigUint num, BigUint den)
    : negative_(negative), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (num_.is_zero()) {
    negative_ = false;
    den_ = BigUint(1);
    return;
  }
  BigUint g = BigUint::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  BigUint lhs = a.num_ * b.den_;
  BigUint rhs = b.num_ * a.den_;
  BigUint den = a.den_ * b.den_;
  if (a.negative_ == b.negative_) {
    return Rational(a.negative_, lhs + rhs, std::move(den));
  }
  const int c = BigUint::compare(lhs, rhs);
  if (c == 0) return Rational();
  if (c > 0) return Rational(a.negative_, lhs - rhs, std::move(den));
  return Rational(b.negative_, rhs - lhs, std::move(den));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  return Rational(a.negative_ != b.negative_, a.num_ * b.num_,
                  a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  if (a.is_zero()) return Rational();
  return Rational(a.negative_ != b.negative_, a.num_ * b.den_,
                  a.den_ * b.num_);
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
  const int mag = BigUint::compare(a.num_ * b.den_, b.num_ * a.den_);
  return a.negative_ ? -mag : mag;
}

double Rational::to_double() const {
  // Rescale only when a part would overflow double (irrelevant for the
  // harmonic-scale values this project produces, but cheap to keep exact).
  BigUint n = num_;
  BigUint d = den_;
  while (n.bit_length() > 1000 && d.bit_length() > 1000) {
    n.shift_right(64);
    d.shift_right(64);
  }
  const double q = n.to_double() / d.to_double();
  return negative_ ? -q : q;
}

std::string Rational::to_string() const {
  std::string s = num_string();
  if (!den_.is_one()) {
    s += "/";
    s += den_.to_decimal();
  }
  return s;
}

std::string Rational::num_string() const {
  std::string s;
  if (negative_) s = "-";
  s += num_.to_decimal();
  return s;
}

}  // namespace qproc::exact
