#include <doctest.h>

#include <random>

#include "ampsup/order.hpp"
#include "oracles.hpp"

using namespace ampsup;
using namespace ampsup::quaternion;

namespace {

MaximalOrderConfig with_row(int row, std::array<Rational, 4> coords) {
  auto cfg = MaximalOrderConfig::default_instance();
  cfg.order_basis[static_cast<std::size_t>(row)] = coords;
  return cfg;
}

}  // namespace

TEST_CASE("default order verifies") {
  const auto rep = verify_order(MaximalOrderConfig::default_instance().basis());
  CHECK(rep.all_pass());
  CHECK(rep.ring_closure);
  CHECK(rep.integrality);
  CHECK(rep.unit_containment);
  CHECK(rep.discriminant == 36);
  CHECK(rep.expected_discriminant == 36);
  CHECK(rep.ramified_primes == std::vector<std::int64_t>{2, 3});
}

TEST_CASE("corrupted bases are reported, never thrown") {
  SUBCASE("not closed under multiplication") {
    const auto rep = verify_order(with_row(3, {Rational(1, 2), Rational(1, 2), 0, 0}).basis());
    CHECK_FALSE(rep.all_pass());
    CHECK_FALSE(rep.failures.empty());
  }
  SUBCASE("non-maximal order has the wrong discriminant") {
    const auto rep = verify_order(with_row(3, {0, 0, 0, 1}).basis());
    CHECK(rep.ring_closure);
    CHECK_FALSE(rep.discriminant_matches);
    CHECK(rep.discriminant == 144);
  }
  SUBCASE("dependent rows") {
    const auto rep = verify_order(with_row(3, {0, 1, 1, 0}).basis());
    CHECK_FALSE(rep.independent);
  }
  CHECK_THROWS_AS(Order::build(with_row(3, {0, 0, 0, 1})), VerificationError);
}

TEST_CASE("integer tables agree with exact quaternion arithmetic") {
  const auto& order = oracle::default_order();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> dist(-30, 30);
  for (int t = 0; t < 500; ++t) {
    OrderVector x, y;
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    const auto ex = order.element(x), ey = order.element(y);
    CHECK(order.norm(x) == quaternion::norm(ex));
    CHECK(order.trace(x) == quaternion::trace(ex));
    CHECK(order.element(order.multiply(x, y)) == ex * ey);
    CHECK(order.element(order.conjugate(x)) == quaternion::conjugate(ex));
    CHECK(order.coordinates(ex) == x);
    const auto m = order.real_image(x);
    CHECK(m.det() == doctest::Approx(static_cast<double>(order.norm(x))).scale(1.0).epsilon(1e-9));
    std::int64_t form = 0;
    const auto& f = order.norm_form();
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) form += f[i][j] * x[i] * x[j];
    }
    CHECK(form == order.norm(x));
  }
}

TEST_CASE("coordinates reject elements outside the order") {
  const auto& order = oracle::default_order();
  const AlgebraParams alg{-1, 3};
  CHECK_FALSE(order.coordinates(QuaternionElement::unit(alg, 1).scaled(Rational(1, 2))).has_value());
  CHECK(order.coordinates(QuaternionElement(alg, {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)}))
            .has_value());
}

TEST_CASE("level of the default order") {
  const auto& order = oracle::default_order();
  CHECK(order.level() == 6);
  CHECK(order.ramification().q == 6);
}
