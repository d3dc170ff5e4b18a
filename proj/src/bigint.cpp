#include "qproc/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qproc::exact {

namespace {
constexpr std::uint64_t kBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
  }
}

BigUint BigUint::from_decimal(const std::string& digits) {
  BigUint out;
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad decimal digit");
    out = out * BigUint(10) + BigUint(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int BigUint::compare(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& rhs) {
  if (compare(*this, rhs) < 0)
    throw std::underflow_error("BigUint subtraction underflow");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < rhs.limbs_.size()) diff -= rhs.limbs_[i];
    if (diff < 0) {
      diff += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  BigUint out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t ai = a.limbs_[i];
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      std::uint64_t cur =
          out.limbs_[i + j] + ai * b.limbs_[j] + carry;
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      std::uint64_t cur = out.limbs_[k] + carry;
      out.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  out.trim();
  return out;
}

DivmodSmallResult BigUint::divmod(std::uint32_t divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  DivmodSmallResult r;
  r.quotient.limbs_.assign(limbs_.size(), 0);
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    r.quotient.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  r.quotient.trim();
  r.remainder = static_cast<std::uint32_t>(rem);
  return r;
}

DivmodResult BigUint::divmod(const BigUint& dividend, const BigUint& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero");
  DivmodResult out;
  if (compare(dividend, divisor) < 0) {
    out.remainder = dividend;
    return out;
  }
  if (divisor.limbs_.size() == 1) {
    DivmodSmallResult s = dividend.divmod(divisor.limbs_[0]);
    out.quotient = std::move(s.quotient);
    out.remainder = BigUint(s.remainder);
    return out;
  }

  // Normalize so the top divisor limb has its high bit set.
  const unsigned shift =
      static_cast<unsigned>(std::countl_zero(divisor.limbs_.back()));
  BigUint u = dividend;
  BigUint v = divisor;
  u.shift_left(shift);
  v.shift_left(shift);
  const std::size_t n = v.limbs_.size();
  const std::size_t m = u.limbs_.size() - n;
  u.limbs_.push_back(0);

  out.quotient.limbs_.assign(m + 1, 0);
  const std::uint64_t vtop = v.limbs_[n - 1];
  const std::uint64_t vnext = v.limbs_[n - 2];

  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t numer =
        (static_cast<std::uint64_t>(u.limbs_[j + n]) << 32) | u.limbs_[j + n - 1];
    std::uint64_t qhat = numer / vtop;
    std::uint64_t rhat = numer % vtop;
    if (qhat >= kBase) {
      qhat = kBase - 1;
      rhat = numer - qhat * vtop;
    }
    while (rhat < kBase &&
           qhat * vnext > ((rhat << 32) | u.limbs_[j + n - 2])) {
      --qhat;
      rhat += vtop;
    }

    // u[j .. j+n] -= qhat * v
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v.limbs_[i] + carry;
      carry = p >> 32;
      std::int64_t diff = static_cast<std::int64_t>(u.limbs_[i + j]) -
                          static_cast<std::int64_t>(p & 0xFFFFFFFFu) - borrow;
      if (diff < 0) {
        diff += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      u.limbs_[i + j] = static_cast<std::uint32_t>(diff);
    }
    std::int64_t top = static_cast<std::int64_t>(u.limbs_[j + n]) -
                       static_cast<std::int64_t>(carry) - borrow;
    if (top < 0) {
      // qhat was one too large: add v back once.
      top += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum =
            static_cast<std::uint64_t>(u.limbs_[i + j]) + v.limbs_[i] + c2;
        u.limbs_[i + j] = static_cast<std::uint32_t>(sum);
        c2 = sum >> 32;
      }
      top += static_cast<std::int64_t>(c2);
      top &= static_cast<std::int64_t>(kBase - 1);
    }
    u.limbs_[j + n] = static_cast<std::uint32_t>(top);
    out.quotient.limbs_[j] = static_cast<std::uint32_t>(qhat);
  }

  out.quotient.trim();
  u.limbs_.resize(n);
  u.trim();
  u.shift_right(shift);
  out.remainder = std::move(u);
  return out;
}

BigUint BigUint::gcd(BigUint a, BigUint b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  unsigned common = 0;
  while (a.is_even() && b.is_even()) {
    a.shift_right(1);
    b.shift_right(1);
    ++common;
  }
  while (a.is_even()) a.shift_right(1);
  while (!b.is_zero()) {
    while (b.is_even()) b.shift_right(1);
    if (compare(a, b) > 0) std::swap(a, b);
    b -= a;
  }
  a.shift_left(common);
  return a;
}

BigUint& BigUint::shift_left(unsigned bits) {
  if (is_zero() || bits == 0) return *this;
  const unsigned limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  limbs_.insert(limbs_.begin(), limb_shift, 0);
  if (bit_shift) {
    std::uint32_t carry = 0;
    for (std::size_t i = limb_shift; i < limbs_.size(); ++i) {
      std::uint32_t next = limbs_[i] >> (32 - bit_shift);
      limbs_[i] = (limbs_[i] << bit_shift) | carry;
      carry = next;
    }
    if (carry) limbs_.push_back(carry);
  }
  return *this;
}

BigUint& BigUint::shift_right(unsigned bits) {
  const unsigned limb_shift = bits / 32;
  const unsigned bit_shift = bits % 32;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
  if (bit_shift) {
    for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
      limbs_[i] = (limbs_[i] >> bit_shift) | (limbs_[i + 1] << (32 - bit_shift));
    }
    limbs_.back() >>= bit_shift;
  }
  trim();
  return *this;
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 32 * (limbs_.size() - 1) +
         (32 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint exceeds u64");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

double BigUint::to_double() const {
  double out = 0.0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    out = out * static_cast<double>(kBase) + static_cast<double>(limbs_[i]);
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  BigUint cur = *this;
  while (!cur.is_zero()) {
    DivmodSmallResult d = cur.divmod(1000000000u);
    std::uint32_t chunk = d.remainder;
    cur = std::move(d.quotient);
    for (int i = 0; i < 9; ++i) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  std::reverse(out.begin(), out.end());
  return out;
}

BigUint lcm_upto(std::uint32_t n) {
  BigUint l{1};
  for (std::uint32_t k = 2; k <= n; ++k) {
    BigUint kk{k};
    l = l / BigUint::gcd(l, kk) * kk;
  }
  return l;
}

}  // namespace qproc::exact
