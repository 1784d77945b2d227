#include <algorithm>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ampsup/bergman.hpp"

namespace ampsup::bergman {

double log_magnitude_extended(const Order& order, std::span<const lattice::BallPoint> points, const UhpPoint& z,
                              const UhpPoint& w, int k) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  detail::check_weight(k);
  if (points.empty()) return -std::numeric_limits<double>::infinity();
  const auto bz = geometry::make_point<Big>(Big(z.x), Big(z.y));
  const auto bw = geometry::make_point<Big>(Big(w.x), Big(w.y));
  std::vector<Big> logs;
  logs.reserve(points.size());
  for (const auto& p : points) {
    const auto m = quaternion::to_real<Big>(quaternion::embed(order.element(p.coords)));
    const auto gw = geometry::mobius(m, bw);
    logs.push_back(log_term_magnitude<Big>(geometry::dist(bz, gw), k));
  }
  const Big top = *std::max_element(logs.begin(), logs.end());
  Big s = 0;
  for (const auto& l : logs) s += exp(l - top);
  return static_cast<double>(top + log(s));
}

}  // namespace ampsup::bergman
