#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fk/numeric.hpp"

using fk::BigInt;
using fk::Rational;

TEST_CASE("bigint small round trips") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(123456789).to_string() == "123456789");
  CHECK(BigInt::from_string("-987654321012345678").to_int64() == -987654321012345678LL);
  CHECK(BigInt(INT64_MIN).fits_int64());
  CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
}

TEST_CASE("bigint matches int64 arithmetic on random values") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    long long a = static_cast<long long>(rng() % 2000001) - 1000000;
    long long b = static_cast<long long>(rng() % 2000001) - 1000000;
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == a * b);
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
      CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
    }
    CHECK(BigInt::compare(BigInt(a), BigInt(b)) == (a < b ? -1 : (a > b ? 1 : 0)));
  }
}

TEST_CASE("bigint large multiplication and division") {
  // 20! = 2432902008176640000, 25! needs more than 64 bits
  BigInt f(1);
  for (int k = 2; k <= 25; ++k) f = f * BigInt(k);
  CHECK(f.to_string() == "15511210043330985984000000");
  BigInt q = f / BigInt::from_string("1000000000000");
  CHECK(q.to_string() == "15511210043330");
  BigInt r = f % BigInt::from_string("1000000000000");
  CHECK(r.to_string() == "985984000000");
  CHECK(BigInt::from_string("15511210043330985984000000") == f);
  CHECK((f / f).to_string() == "1");
  CHECK((f % f).is_zero());
}

TEST_CASE("bigint division against multiplication on random wide values") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 400; ++i) {
    BigInt a = BigInt(static_cast<long long>(rng() >> 1)) * BigInt(static_cast<long long>(rng() >> 1));
    BigInt b = BigInt(static_cast<long long>((rng() % 1000000000000ULL) + 1));
    if (rng() & 1) a = -a;
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
  }
}

TEST_CASE("bigint division with multi-limb divisors") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    BigInt a(static_cast<long long>(rng() >> 1));
    a = a * BigInt(static_cast<long long>(rng() >> 1)) *
        BigInt(static_cast<long long>(rng() >> 1));
    BigInt b(static_cast<long long>(rng() >> 1));
    b = b * BigInt(static_cast<long long>((rng() % 0xffffffffULL) + 1));
    if (rng() & 1) a = -a;
    if (rng() & 1) b = -b;
    BigInt q, r;
    BigInt::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
}

TEST_CASE("bigint gcd") {
  CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-5)) == BigInt(5));
  BigInt big = BigInt::from_string("123456789012345678901234567890");
  CHECK(BigInt::gcd(big * BigInt(4), big * BigInt(6)) == big * BigInt(2));
}

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-2, -4).to_string() == "1/2");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)).to_string() == "1/2");
  CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
  CHECK((Rational(3, 7) * Rational(7, 3)).is_one());
  CHECK((Rational(5) / Rational(-10)).to_string() == "-1/2");
  CHECK(Rational(7).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());
  CHECK(Rational::from_string("-22/7").to_string() == "-22/7");
  CHECK(Rational::from_string("42").to_string() == "42");
}

TEST_CASE("rational promotes past 64 bits and demotes back") {
  Rational big(INT64_MAX);
  Rational sum = big + big;  // 2*(2^63-1) does not fit int64
  CHECK(sum.to_string() == "18446744073709551614");
  Rational back = sum - big;
  CHECK(back == big);
  CHECK(back.is_small());

  Rational tiny(1, INT64_MAX);
  Rational prod = tiny * tiny;
  CHECK(prod.to_string() == "1/85070591730234615847396907784232501249");
  CHECK((prod / tiny) == tiny);
}

TEST_CASE("rational comparisons") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(0) < Rational(1, 1000000));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    long long a = static_cast<long long>(rng() % 201) - 100;
    long long b = static_cast<long long>(rng() % 100) + 1;
    long long c = static_cast<long long>(rng() % 201) - 100;
    long long d = static_cast<long long>(rng() % 100) + 1;
    bool expected = a * d < c * b;
    CHECK((Rational(a, b) < Rational(c, d)) == expected);
  }
}

TEST_CASE("rational string parsing rejects junk") {
  CHECK_THROWS(Rational::from_string(""));
  CHECK_THROWS(Rational::from_string("abc"));
  CHECK_THROWS(Rational::from_string("1/0"));
  CHECK_THROWS(Rational::from_string("1/ 2"));
}
