#include <doctest.h>

#include "ampsup/arith.hpp"
#include "ampsup/lattice.hpp"
#include "oracles.hpp"

using namespace ampsup;
using namespace ampsup::lattice;

TEST_CASE("degrees from exact coset reduction of a box scan") {
  const auto& order = oracle::default_order();
  for (std::int64_t n : {1, 5, 7, 11}) {
    const auto scan = oracle::box_scan(order, n, UhpPoint{0, 1}, 40.0);
    const std::vector<OrderVector> elems(scan.begin(), scan.end());
    const auto expected = oracle::exact_coset_count(order, elems, n);
    CAPTURE(n);
    CHECK(coset_reps(order, n).degree == expected);
    CHECK(expected == static_cast<std::size_t>(arith::sigma1(n)));
  }
}

TEST_CASE("known degrees and the degree relation") {
  const auto& order = oracle::default_order();
  DegreeTable table(order);
  CHECK(table.degree(1) == 1);
  CHECK(table.degree(5) == 6);
  CHECK(table.degree(7) == 8);
  CHECK(table.degree(25) == 31);
  CHECK(table.degree(35) == 48);
  CHECK(table.degree(5) * table.degree(5) == table.degree(25) + 5 * table.degree(1));
  CHECK(table.decomposition(25).audited);
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{5, 5}, {5, 7}, {7, 7}, {5, 11}, {5, 25}}) {
    CAPTURE(m);
    CAPTURE(n);
    CHECK(table.relation_holds(m, n));
  }
}

TEST_CASE("same_coset basics") {
  const auto& order = oracle::default_order();
  const auto ball = enumerate_ball(order, 5, UhpPoint{0, 1}, 10.0);
  const auto units = enumerate_ball(order, 1, UhpPoint{0.2, 1.3}, 30.0);
  REQUIRE(!ball.points.empty());
  REQUIRE(units.size() > 2);
  for (const auto& p : ball.points) {
    const auto& a = p.coords;
    CHECK(same_coset(order, a, a, 5));
    CHECK(same_coset(order, a, OrderVector{-a[0], -a[1], -a[2], -a[3]}, 5));
    for (const auto& u : units.points) CHECK(same_coset(order, order.multiply(u.coords, a), a, 5));
  }
  CHECK_THROWS_AS(same_coset(order, ball.points[0].coords, units.points[0].coords, 5), InputError);
}

TEST_CASE("representatives partition the ball") {
  const auto& order = oracle::default_order();
  const auto dec = coset_reps(order, 7);
  for (std::size_t i = 0; i < dec.reps.size(); ++i) {
    for (std::size_t j = i + 1; j < dec.reps.size(); ++j) CHECK_FALSE(same_coset(order, dec.reps[i], dec.reps[j], 7));
  }
  std::vector<std::size_t> hits(dec.reps.size());
  for (const auto& p : enumerate_ball(order, 7, UhpPoint{0.3, 1.7}, 50.0).points) {
    const auto idx = dec.find(order, p.coords);
    REQUIRE(idx >= 0);
    std::size_t matches = 0;
    for (const auto& r : dec.reps) matches += same_coset(order, p.coords, r, 7);
    CHECK(matches == 1);
    ++hits[static_cast<std::size_t>(idx)];
  }
  for (auto h : hits) CHECK(h > 0);
}

TEST_CASE("non-stabilising search is a resource error") {
  const auto& order = oracle::default_order();
  CosetOptions opts;
  opts.initial_cap = 1.0;
  opts.max_cap = 2.0;
  CHECK_THROWS_AS(coset_reps(order, 35, opts), ResourceError);
  CHECK_THROWS_AS(coset_reps(order, 0), InputError);
}
