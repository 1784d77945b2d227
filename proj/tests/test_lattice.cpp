#include <doctest.h>

#include <omp.h>

#include "ampsup/lattice.hpp"
#include "oracles.hpp"

using namespace ampsup;
using namespace ampsup::lattice;

namespace {

std::set<OrderVector> as_set(const LatticeBall& b) {
  std::set<OrderVector> s;
  for (const auto& p : b.points) s.insert(p.coords);
  return s;
}

}  // namespace

TEST_CASE("pruned enumeration equals the box scan") {
  const auto& order = oracle::default_order();
  for (const UhpPoint z : {UhpPoint{0, 1}, UhpPoint{0.3, 1.7}, UhpPoint{-0.41, 0.77}}) {
    for (std::int64_t n = 1; n <= 10; ++n) {
      for (double cap : {1.0, 2.0, 10.0, 20.0}) {
        CAPTURE(n);
        CAPTURE(cap);
        const auto ball = enumerate_ball(order, n, z, cap);
        CHECK(as_set(ball) == oracle::box_scan(order, n, z, cap));
        CHECK(ball.points.size() == as_set(ball).size());
      }
    }
  }
}

TEST_CASE("Frobenius identity for every enumerated element") {
  const auto& order = oracle::default_order();
  for (const UhpPoint z : {UhpPoint{0, 1}, UhpPoint{0.3, 1.7}}) {
    const auto form = majorant(order, z);
    for (std::int64_t n : {1, 2, 5, 7}) {
      for (const auto& p : enumerate_ball(order, n, z, 30.0).points) {
        const double q = form.value(p.coords);
        CHECK(std::fabs(q - 2.0 * n * p.cosh_dist) <= 1e-8 * q);
        CHECK(order.norm(p.coords) == n);
      }
    }
  }
}

TEST_CASE("two-point balls satisfy the Frobenius identity") {
  const auto& order = oracle::default_order();
  const UhpPoint z{0.1, 1.2}, w{-0.3, 0.9};
  const auto form = majorant(order, z, w);
  for (const auto& p : enumerate_ball(order, 1, z, w, 40.0).points) {
    const double q = form.value(p.coords);
    CHECK(std::fabs(q - 2.0 * p.cosh_dist) <= 1e-8 * q);
    CHECK(p.cosh_dist == doctest::Approx(cosh_displacement(order, p.coords, z, w)));
  }
}

TEST_CASE("negation closure and ordering") {
  const auto& order = oracle::default_order();
  const auto ball = enumerate_ball(order, 5, UhpPoint{0.2, 1.1}, 25.0);
  const auto s = as_set(ball);
  for (const auto& c : s) CHECK(s.count({-c[0], -c[1], -c[2], -c[3]}) == 1);
  CHECK(std::is_sorted(ball.points.begin(), ball.points.end(),
                       [](const BallPoint& l, const BallPoint& r) { return l.coords < r.coords; }));
  CHECK(ball.size() % 2 == 0);
  CHECK(ball.size_mod_sign() * 2 == ball.size());
}

TEST_CASE("parallel and serial enumerators agree for any thread count") {
  const auto& order = oracle::default_order();
  const UhpPoint z{0.3, 1.7}, w{0.1, 0.9};
  for (std::int64_t n : {1, 7, 25}) {
    const auto ref = serial::enumerate_ball(order, n, z, w, 60.0);
    for (int threads : {1, 2, 4}) {
      omp_set_num_threads(threads);
      const auto par = enumerate_ball(order, n, z, w, 60.0);
      REQUIRE(par.points.size() == ref.points.size());
      for (std::size_t i = 0; i < ref.points.size(); ++i) {
        CHECK(par.points[i].coords == ref.points[i].coords);
        CHECK(par.points[i].cosh_dist == ref.points[i].cosh_dist);
      }
    }
  }
  omp_set_num_threads(omp_get_num_procs());
}

TEST_CASE("budget exhaustion carries the partial ball") {
  const auto& order = oracle::default_order();
  EnumerationOptions opts;
  opts.budget = 10;
  try {
    enumerate_ball(order, 1, UhpPoint{0, 1}, 100.0, opts);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.partial.partial);
    CHECK(e.partial.size() > 10);
  }
  CHECK_THROWS_AS(serial::enumerate_ball(order, 1, UhpPoint{0, 1}, UhpPoint{0, 1}, 100.0, opts), ResourceError);
}

TEST_CASE("argument checks") {
  const auto& order = oracle::default_order();
  CHECK_THROWS_AS(enumerate_ball(order, 0, UhpPoint{0, 1}, 2.0), InputError);
  CHECK_THROWS_AS(enumerate_ball(order, 1, UhpPoint{0, 1}, 0.5), InputError);
  CHECK_THROWS_AS(majorant(order, UhpPoint{0, -1}), InputError);
  CHECK_THROWS_AS(counting_function(order, 1, UhpPoint{0, 1}, -1), InputError);
}

TEST_CASE("identity ball") {
  const auto& order = oracle::default_order();
  const auto ball = enumerate_ball(order, 1, UhpPoint{0.123, 1.456}, 1.0);
  CHECK(ball.size() == 2);
  CHECK(ball.size_mod_sign() == 1);
}

TEST_CASE("counting function is monotone in rho") {
  const auto& order = oracle::default_order();
  const UhpPoint z{0.3, 1.7};
  std::size_t prev = 0;
  for (double rho : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const auto b = counting_function(order, 5, z, rho);
    CHECK(b.size() >= prev);
    CHECK(b.cosh_cap == doctest::Approx(1 + 2 * rho));
    prev = b.size();
  }
}
