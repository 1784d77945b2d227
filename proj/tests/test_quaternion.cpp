#include <doctest.h>

#include <random>

#include "ampsup/quaternion.hpp"
#include "oracles.hpp"

using namespace ampsup;
using namespace ampsup::quaternion;

namespace {

QuaternionElement random_element(std::mt19937_64& rng, AlgebraParams alg) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::array<Rational, 4> c;
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return {alg, c};
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational(" 4/6 ") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("abc"), ConfigError);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
  CHECK(to_string(Rational(4)) == "4");
}

TEST_CASE("basis relations") {
  const AlgebraParams alg{-1, 3};
  const auto one = QuaternionElement::unit(alg, 0);
  const auto i = QuaternionElement::unit(alg, 1);
  const auto j = QuaternionElement::unit(alg, 2);
  const auto ij = QuaternionElement::unit(alg, 3);
  CHECK(i * i == QuaternionElement::scalar(alg, -1));
  CHECK(j * j == QuaternionElement::scalar(alg, 3));
  CHECK(i * j == ij);
  CHECK(j * i == -ij);
  CHECK(ij * ij == QuaternionElement::scalar(alg, 3));
  CHECK(one * ij == ij);
  CHECK(norm(ij) == -3);
  CHECK(norm(i) == 1);
  CHECK(norm(j) == -3);
}

TEST_CASE("norm and trace identities on random elements") {
  std::mt19937_64 rng(7);
  for (AlgebraParams alg : {AlgebraParams{-1, 3}, AlgebraParams{2, 5}, AlgebraParams{-2, 7}}) {
    for (int t = 0; t < 200; ++t) {
      const auto x = random_element(rng, alg), y = random_element(rng, alg), w = random_element(rng, alg);
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * conjugate(x) == QuaternionElement::scalar(alg, norm(x)));
      CHECK(x + conjugate(x) == QuaternionElement::scalar(alg, trace(x)));
      CHECK(conjugate(x * y) == conjugate(y) * conjugate(x));
    }
  }
}

TEST_CASE("split embedding is a homomorphism carrying norm to det") {
  std::mt19937_64 rng(11);
  for (AlgebraParams alg : {AlgebraParams{-1, 3}, AlgebraParams{2, 5}, AlgebraParams{3, -7}}) {
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(rng, alg), y = random_element(rng, alg);
      const auto ex = embed(x), ey = embed(y), exy = embed(x * y);
      const auto prod = ex * ey;
      for (std::size_t r = 0; r < 4; ++r) {
        CHECK(prod.entries[r].u == exy.entries[r].u);
        CHECK(prod.entries[r].v == exy.entries[r].v);
      }
      CHECK(ex.det().u == norm(x));
      CHECK(ex.det().v == 0);
      CHECK(ex.trace().u == trace(x));
      const auto m = to_real<double>(ex);
      CHECK(m.det() == doctest::Approx(static_cast<double>(norm(x))).epsilon(1e-9).scale(1.0));
    }
  }
  CHECK_THROWS_AS(embed(QuaternionElement::unit({-1, -3}, 1)), InputError);
}

TEST_CASE("mismatched algebras are rejected") {
  const auto x = QuaternionElement::unit({-1, 3}, 1);
  const auto y = QuaternionElement::unit({2, 5}, 1);
  CHECK_THROWS_AS(x * y, ConfigError);
  CHECK_THROWS_AS(x + y, ConfigError);
}

TEST_CASE("hilbert symbol matches a brute-force local search") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (std::int64_t a : {-15, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 14}) {
      for (std::int64_t b : {-7, -5, -3, -2, -1, 1, 2, 3, 5, 6, 11}) {
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(hilbert_symbol(a, b, Place::finite(p)) == oracle::hilbert_by_search(a, b, p));
      }
    }
  }
}

TEST_CASE("hilbert symbol product formula") {
  for (std::int64_t a = -12; a <= 12; ++a) {
    for (std::int64_t b = -12; b <= 12; ++b) {
      if (a == 0 || b == 0) continue;
      int prod = hilbert_symbol(a, b, Place::infinity());
      for (std::int64_t p = 2; p <= 13; ++p) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
        if (prime) prod *= hilbert_symbol(a, b, Place::finite(p));
      }
      CHECK(prod == 1);
    }
  }
  CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::finite(3)), InputError);
  CHECK_THROWS_AS(hilbert_symbol(1, 1, Place::finite(4)), InputError);
}

TEST_CASE("ramification of the default algebra") {
  const auto r = ramified_primes({-1, 3});
  CHECK(r.ramified_primes == std::vector<std::int64_t>{2, 3});
  CHECK(r.q == 6);
  CHECK(r.D == 6);
  CHECK_FALSE(find_isotropic_vector({-1, 3}, 50).has_value());
  CHECK(ramified_primes({-1, 7}).ramified_primes == std::vector<std::int64_t>{2, 7});
}

TEST_CASE("invalid algebras") {
  CHECK_THROWS_AS(validate_params({-1, -1}, 10), ConfigError);  // definite
  CHECK_THROWS_AS(validate_params({1, 3}, 10), ConfigError);    // split (i^2 = 1)
  CHECK_THROWS_AS(validate_params({0, 3}, 10), ConfigError);
  CHECK_THROWS_AS(validate_params({-1, 2}, 10), ConfigError);   // M_2(Q)
  CHECK(find_isotropic_vector({-1, 2}, 10).has_value());
}
