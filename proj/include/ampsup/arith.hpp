#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ampsup::arith {

bool is_prime(std::int64_t n);

// All primes <= limit (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// Prime factorization as (prime, exponent) pairs in increasing prime order. |n| >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t sigma1(std::int64_t n);
std::int64_t divisor_count(std::int64_t n);

// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::int64_t p);

// Jacobi symbol (a | m) for odd positive m.
int jacobi(std::int64_t a, std::int64_t m);

// floor(sqrt(n)) for n >= 0, exact on 128-bit input.
__int128 isqrt(__int128 n);
bool is_square(__int128 n);

}  // namespace ampsup::arith
