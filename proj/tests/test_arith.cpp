#include <doctest.h>

#include <numeric>

#include "ampsup/arith.hpp"

using namespace ampsup::arith;

TEST_CASE("sieve agrees with trial division") {
  const auto primes = primes_up_to(1000);
  std::size_t idx = 0;
  for (std::int64_t n = 0; n <= 1000; ++n) {
    bool trial = n >= 2;
    for (std::int64_t d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime(n) == trial);
    if (trial) CHECK(primes.at(idx++) == n);
  }
  CHECK(idx == primes.size());
  CHECK(primes.size() == 168);
}

TEST_CASE("divisor functions") {
  for (std::int64_t n = 1; n <= 300; ++n) {
    std::int64_t s = 0, c = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) {
        s += d;
        ++c;
      }
    }
    CHECK(sigma1(n) == s);
    CHECK(divisor_count(n) == c);
    const auto ds = divisors(n);
    CHECK(static_cast<std::int64_t>(ds.size()) == c);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
  }
  CHECK(sigma1(5) == 6);
  CHECK(sigma1(25) == 31);
  CHECK(sigma1(35) == 48);
}

TEST_CASE("factorization round trip") {
  for (std::int64_t n = 2; n <= 5000; ++n) {
    std::int64_t prod = 1;
    for (auto [p, e] : factorize(n)) {
      CHECK(is_prime(p));
      CHECK(valuation(n, p) == e);
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("jacobi symbol matches Euler's criterion at primes") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 101}) {
    for (std::int64_t a = -20; a <= 20; ++a) {
      std::int64_t r = 1, base = ((a % p) + p) % p;
      for (std::int64_t e = (p - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
      }
      const int expected = r == 0 ? 0 : (r == 1 ? 1 : -1);
      CHECK(jacobi(a, p) == expected);
    }
  }
}

TEST_CASE("integer square roots") {
  for (__int128 n = 0; n < 20000; ++n) {
    const auto r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(is_square(n) == (r * r == n));
  }
  const __int128 big = static_cast<__int128>(3037000499LL) * 3037000499LL;
  CHECK(isqrt(big) == 3037000499LL);
  CHECK(isqrt(big - 1) == 3037000498LL);
  CHECK_FALSE(is_square(-4));
}
