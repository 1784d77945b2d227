#include <cmath>
#include <limits>
#include <numeric>

#include "ampsup/amplifier.hpp"
#include "ampsup/lattice.hpp"

namespace ampsup::lattice {

std::vector<IwSarRow> iw_sar_report(const Order& order, std::int64_t n_max, const UhpPoint& z, int k, double cosh_cap,
                                    const EnumerationOptions& options) {
  bergman::detail::check_weight(k);
  if (n_max < 1) throw InputError("iw_sar_report: n_max must be positive");
  std::vector<IwSarRow> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (std::gcd(n, order.level()) != 1) continue;
    const auto ball = enumerate_ball(order, n, z, cosh_cap, options);
    const double nd = static_cast<double>(n);
    const double cut = 1.0 / (nd * nd * nd);
    IwSarRow row;
    row.n = n;
    row.terms = ball.size();
    for (const auto& p : ball.points) {
      const auto gz = geometry::mobius(order.real_image(p.coords), z);
      const double term = std::exp(-0.5 * k * std::log1p(geometry::u_value(z, gz)));
      if (geometry::u_value(z, gz) <= cut) {
        ++row.small_ball_count;
        row.small_ball_sum += term;
      } else {
        row.remainder_sum += term;
      }
    }
    row.comparison = k >= 6 ? nd * amplifier::tail_integral(n, k).total() : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace ampsup::lattice
