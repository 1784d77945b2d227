#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ampsup/geometry.hpp"

using namespace ampsup;
using namespace ampsup::geometry;
using Big = boost::multiprecision::cpp_bin_float_50;

namespace {

// acosh(1 + |z-w|^2 / (2 y v)) evaluated in 50 digits
double reference_dist(const UhpPoint& z, const UhpPoint& w) {
  const Big dx = Big(z.x) - Big(w.x), dy = Big(z.y) - Big(w.y);
  return static_cast<double>(acosh(1 + (dx * dx + dy * dy) / (2 * Big(z.y) * Big(w.y))));
}

}  // namespace

TEST_CASE("distance against a 50-digit reference") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(-3, 3), uy(0.05, 5), tiny(-1e-9, 1e-9);
  for (int t = 0; t < 2000; ++t) {
    const UhpPoint z{ux(rng), uy(rng)};
    const UhpPoint w = t % 2 ? UhpPoint{ux(rng), uy(rng)} : UhpPoint{z.x + tiny(rng), z.y * (1 + tiny(rng))};
    const double ref = reference_dist(z, w);
    CHECK(dist(z, w) == doctest::Approx(ref).epsilon(1e-12));
    const auto bz = make_point<Big>(z.x, z.y), bw = make_point<Big>(w.x, w.y);
    CHECK(static_cast<double>(dist(bz, bw)) == doctest::Approx(ref).epsilon(1e-30));
  }
  CHECK(dist(UhpPoint{0, 1}, UhpPoint{0, 1}) == 0.0);
  CHECK(dist(UhpPoint{0, 1}, UhpPoint{0, 2}) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("u and cosh d") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ux(-2, 2), uy(0.1, 3);
  for (int t = 0; t < 500; ++t) {
    const UhpPoint z{ux(rng), uy(rng)}, w{ux(rng), uy(rng)};
    CHECK(cosh_dist(z, w) == doctest::Approx(1 + 2 * u_value(z, w)));
    CHECK(cosh_dist(z, w) == doctest::Approx(std::cosh(dist(z, w))));
    CHECK(cosh2_half_dist(z, w) == doctest::Approx(1 + u_value(z, w)));
    CHECK(u_value(z, w) == doctest::Approx(u_value(w, z)));
  }
}

TEST_CASE("Mobius action is isometric and composes") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ue(-2, 2), ux(-2, 2), uy(0.2, 3);
  for (int t = 0; t < 300; ++t) {
    RealMatrix2 g{ue(rng), ue(rng), ue(rng), ue(rng)};
    if (g.det() <= 0.1) continue;
    RealMatrix2 h{ue(rng), ue(rng), ue(rng), ue(rng)};
    if (h.det() <= 0.1) continue;
    const UhpPoint z{ux(rng), uy(rng)}, w{ux(rng), uy(rng)};
    const auto gz = mobius(g, z), gw = mobius(g, w);
    CHECK(dist(gz, gw) == doctest::Approx(dist(z, w)).epsilon(1e-9));
    const auto a = mobius(g * h, z), b = mobius(g, mobius(h, z));
    CHECK(a.x == doctest::Approx(b.x).epsilon(1e-9));
    CHECK(a.y == doctest::Approx(b.y).epsilon(1e-9));
    // Im(gz) = det(g) y / |j(g,z)|^2
    CHECK(gz.y == doctest::Approx(g.det() * z.y / std::norm(j_factor(g, z))));
  }
  CHECK_THROWS_AS(mobius(RealMatrix2{0, 1, 1, 0}, UhpPoint{0, 1}), InputError);
}

TEST_CASE("translations") {
  const UhpPoint z{0.3, 1.7};
  const auto i = UhpPoint{0, 1};
  const auto gz = mobius(translation_to(z), i);
  CHECK(gz.x == doctest::Approx(z.x));
  CHECK(gz.y == doctest::Approx(z.y));
  const auto back = mobius(translation_from(z), z);
  CHECK(back.x == doctest::Approx(0).scale(1));
  CHECK(back.y == doctest::Approx(1));
  CHECK(translation_to(z).det() == doctest::Approx(1));
}

TEST_CASE("Petersson magnitude") {
  CHECK(petersson_magnitude({3, 4}, UhpPoint{0, 4}, 2) == doctest::Approx(5 * 4.0));
  CHECK(petersson_magnitude({1, 0}, UhpPoint{0, 4}, 4) == doctest::Approx(16.0));
}

TEST_CASE("grid sampling") {
  const auto pts = sample_grid({-0.5, 0.5, 1, 2}, 3, 2);
  REQUIRE(pts.size() == 6);
  CHECK(pts.front().x == -0.5);
  CHECK(pts.front().y == 1);
  CHECK(pts.back().x == 0.5);
  CHECK(pts.back().y == 2);
  const auto mid = sample_grid({0, 1, 1, 3}, 1, 1);
  CHECK(mid.at(0).x == 0.5);
  CHECK(mid.at(0).y == 2);
  CHECK_THROWS_AS(sample_grid({0, 1, -1, 1}, 2, 2), InputError);
}
