#include "ampsup/arith.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ampsup/errors.hpp"

namespace ampsup::arith {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t f = 5; f <= n / f; f += 6) {
    if (n % f == 0 || n % (f + 2) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    out.push_back(p);
    for (std::int64_t m = p * p; m <= limit; m += p) composite[static_cast<std::size_t>(m)] = true;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n == 0) throw InputError("factorize: zero has no factorization");
  n = std::llabs(n);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t sigma1(std::int64_t n) {
  std::int64_t s = 0;
  for (auto d : divisors(n)) s += d;
  return s;
}

std::int64_t divisor_count(std::int64_t n) {
  std::int64_t c = 1;
  for (auto [p, e] : factorize(n)) c *= (e + 1);
  return c;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw InputError("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int jacobi(std::int64_t a, std::int64_t m) {
  if (m <= 0 || m % 2 == 0) throw InputError("jacobi: modulus must be odd and positive");
  a %= m;
  if (a < 0) a += m;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const auto r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, m);
    if (a % 4 == 3 && m % 4 == 3) result = -result;
    a %= m;
  }
  return m == 1 ? result : 0;
}

__int128 isqrt(__int128 n) {
  if (n < 0) throw InputError("isqrt of negative");
  if (n < 2) return n;
  auto x = static_cast<__int128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

bool is_square(__int128 n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

}  // namespace ampsup::arith
