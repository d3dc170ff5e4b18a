#include <cstdint>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qproc/bigint.hpp"
#include "qproc/rational.hpp"

using qproc::exact::BigUint;
using qproc::exact::Rational;

TEST_CASE("biguint small arithmetic matches u64") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::uint64_t a = rng() >> (2 + rng() % 40);  // keep sums in range
    const std::uint64_t b = rng() >> (2 + rng() % 40);
    CHECK((BigUint(a) + BigUint(b)).to_u64() == a + b);
    if (a >= b) CHECK((BigUint(a) - BigUint(b)).to_u64() == a - b);
    const auto wide = static_cast<unsigned __int128>(a) * b;
    if (wide >> 64 == 0)
      CHECK((BigUint(a) * BigUint(b)).to_u64() == static_cast<std::uint64_t>(wide));
    if (b != 0) {
      const auto dm = BigUint::divmod(BigUint(a), BigUint(b));
      CHECK(dm.quotient.to_u64() == a / b);
      CHECK(dm.remainder.to_u64() == a % b);
    }
  }
}

TEST_CASE("biguint divmod round-trips on wide operands") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    // Build a ~(2-8 limb) divisor and a wider dividend.
    BigUint d(rng() | 1);
    for (int k = 0; k < static_cast<int>(rng() % 3); ++k) d *= BigUint(rng() | 1);
    BigUint q(rng());
    for (int k = 0; k < static_cast<int>(rng() % 3); ++k) q *= BigUint(rng() | 1);
    BigUint r(rng() % 1000003);
    if (!(r < d)) r = BigUint::divmod(r, d).remainder;
    const BigUint n = q * d + r;
    const auto dm = BigUint::divmod(n, d);
    CHECK(dm.quotient == q);
    CHECK(dm.remainder == r);
  }
}

namespace {

// Slow reference division: binary shift-subtract. Obviously correct, used
// to cross-check the production algorithm on adversarial limb patterns
// (near-maximal divisor limbs make the quotient-estimate corrections and
// the add-back branch reachable).
std::pair<BigUint, BigUint> reference_divmod(const BigUint& u, const BigUint& v) {
  BigUint q(0);
  BigUint r(0);
  const std::size_t bits = u.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    r.shift_left(1);
    // bit i of u
    BigUint probe = u;
    probe.shift_right(static_cast<unsigned>(i));
    if (!probe.is_even()) r += BigUint(1);
    q.shift_left(1);
    if (BigUint::compare(v, r) <= 0) {
      r -= v;
      q += BigUint(1);
    }
  }
  return {q, r};
}

std::uint32_t adversarial_limb(std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return 0x00000000u;
    case 1: return 0x00000001u;
    case 2: return 0x7FFFFFFFu;
    case 3: return 0x80000000u;
    case 4: return 0xFFFFFFFFu;
    default: return static_cast<std::uint32_t>(rng());
  }
}

BigUint adversarial_big(std::mt19937_64& rng, int limbs) {
  BigUint out(0);
  for (int i = 0; i < limbs; ++i) {
    out.shift_left(32);
    out += BigUint(adversarial_limb(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("biguint divmod agrees with a shift-subtract reference") {
  std::mt19937_64 rng(4242);
  int checked = 0;
  while (checked < 1500) {
    const BigUint u = adversarial_big(rng, 2 + static_cast<int>(rng() % 5));
    const BigUint v = adversarial_big(rng, 1 + static_cast<int>(rng() % 4));
    if (v.is_zero()) continue;
    ++checked;
    const auto got = BigUint::divmod(u, v);
    const auto want = reference_divmod(u, v);
    CHECK(got.quotient == want.first);
    CHECK(got.remainder == want.second);
    CHECK(got.quotient * v + got.remainder == u);
  }
}

TEST_CASE("biguint divmod add-back family") {
  // (v << 64) - 1 divided by v = (2^31 + a) * 2^64 + c * 2^32 + 1 forces
  // the quotient-estimate add-back correction on every division.
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t c = 0; c < 16; ++c) {
      BigUint v(0x80000000ull + a);
      v.shift_left(32);
      v += BigUint(c);
      v.shift_left(32);
      v += BigUint(1);
      BigUint u = v;
      u.shift_left(64);
      u -= BigUint(1);
      const auto got = BigUint::divmod(u, v);
      const auto want = reference_divmod(u, v);
      CHECK(got.quotient == want.first);
      CHECK(got.remainder == want.second);
    }
  }
}

TEST_CASE("biguint gcd agrees with std::gcd on u64") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::uint64_t a = rng() >> (rng() % 32);
    const std::uint64_t b = rng() >> (rng() % 32);
    std::uint64_t g = a;
    std::uint64_t h = b;
    while (h) {
      g %= h;
      std::swap(g, h);
    }
    CHECK(BigUint::gcd(BigUint(a), BigUint(b)).to_u64() == g);
  }
}

TEST_CASE("biguint decimal round trip") {
  CHECK(BigUint(0).to_decimal() == "0");
  CHECK(BigUint(1234567890123456789ull).to_decimal() == "1234567890123456789");
  const BigUint big = BigUint::from_decimal("340282366920938463463374607431768211457");
  CHECK(big.to_decimal() == "340282366920938463463374607431768211457");
  CHECK_THROWS_AS(BigUint::from_decimal("12x4"), std::invalid_argument);
}

TEST_CASE("lcm_upto small values") {
  CHECK(qproc::exact::lcm_upto(1).to_u64() == 1);
  CHECK(qproc::exact::lcm_upto(6).to_u64() == 60);
  CHECK(qproc::exact::lcm_upto(10).to_u64() == 2520);
}

TEST_CASE("rational arithmetic and normalization") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(-6, 4) == Rational(-3, 2));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
  CHECK((Rational(5, 3) - Rational(5, 3)).is_zero());
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(3, -9) == Rational(-1, 3));
  CHECK(Rational(7, 2).to_string() == "7/2");
  CHECK(Rational(-7, 2).to_string() == "-7/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("rational ordering across signs") {
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(-2, 3) < Rational(-1, 2));
  CHECK(Rational(-1, 2) <= Rational(-1, 2));
  CHECK(Rational(0) < Rational(1, 1000));
  CHECK(Rational(-1, 1000) < Rational(0));
  CHECK(Rational::compare(Rational(5, 7), Rational(5, 7)) == 0);
  CHECK(Rational(-5, 7).to_double() == doctest::Approx(-5.0 / 7.0));
}

TEST_CASE("rational field properties on random values") {
  std::mt19937_64 rng(2024);
  const auto draw = [&rng] {
    const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const auto den = static_cast<std::int64_t>(rng() % 999) + 1;
    return Rational(num, den);
  };
  for (int iter = 0; iter < 500; ++iter) {
    const Rational a = draw();
    const Rational b = draw();
    const Rational c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
