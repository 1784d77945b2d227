#include <map>
#include <numbers>
#include <numeric>

#include "ampsup/amplifier.hpp"
#include "ampsup/arith.hpp"

namespace ampsup::amplifier {

namespace {

struct HeckeSummary {
  bergman::HeckeKernelValue value;
  double termwise_max_rel_err = 0;
};

// Compares, per element gamma of norm n, the magnitude read off the distance with the
// one assembled from (y Im(gamma z))^{k/2} |z - conj(gamma z)|^{-k}, Im(gamma z) = n y / |j(gamma,z)|^2.
double termwise_error(const quaternion::Order& order, const geometry::UhpPoint& z, std::int64_t n, int k,
                      double cosh_cap, const lattice::EnumerationOptions& options) {
  const auto ball = lattice::enumerate_ball(order, n, z, cosh_cap, options);
  const double pre = std::log((k - 1) / (4.0 * std::numbers::pi));
  double worst = 0;
  for (const auto& p : ball.points) {
    const auto g = order.real_image(p.coords);
    const auto gz = geometry::mobius(g, z);
    const double direct = bergman::log_term_magnitude<double>(geometry::dist(z, gz), k);
    const std::complex<double> j{g.c * z.x + g.d, g.c * z.y};
    const double im = static_cast<double>(n) * z.y / std::norm(j);
    const std::complex<double> gap{z.x - gz.x, z.y + im};
    const double booked = pre + k * std::numbers::ln2 + 0.5 * k * (std::log(z.y) + std::log(im)) - k * std::log(std::abs(gap));
    worst = std::max(worst, std::fabs(std::expm1(direct - booked)));
  }
  return worst;
}

}  // namespace

AmplifiedReport amplified_inequality_check(const quaternion::Order& order, const geometry::UhpPoint& z, int k,
                                           std::int64_t N, double cosh_cap, const bergman::KernelOptions& options) {
  bergman::detail::check_weight(k);
  AmplifiedReport rep;
  rep.k = k;
  rep.N = N;
  rep.z = z;
  rep.cosh_cap = cosh_cap;
  const auto plan = build_amplifier(N, order.level());
  const EigenvalueBoundModel model;
  rep.moments = moment_sums(plan, model);

  std::map<std::int64_t, HeckeSummary> cache;
  auto summary = [&](std::int64_t frak) -> const HeckeSummary& {
    auto it = cache.find(frak);
    if (it != cache.end()) return it->second;
    HeckeSummary s;
    s.value = bergman::hecke_translate_kernel(order, z, frak, k, cosh_cap, options);
    s.termwise_max_rel_err = termwise_error(order, z, frak, k, cosh_cap, options.enumeration);
    return cache.emplace(frak, s).first->second;
  };

  for (const auto& em : plan.entries) {
    for (const auto& en : plan.entries) {
      const std::int64_t m = em.n, n = en.n;
      for (auto d : arith::divisors(std::gcd(m, n))) {
        AmplifiedTerm t;
        t.m = m;
        t.n = n;
        t.d = d;
        t.frak_n = m * n / (d * d);
        t.alpha_weight = model.alpha_bound(em) * model.alpha_bound(en);
        const auto& s = summary(t.frak_n);
        t.hecke_log = s.value.total.log_abs;
        t.contribution = t.alpha_weight * d / std::sqrt(static_cast<double>(m) * static_cast<double>(n)) *
                         s.value.total.value();
        const double total = s.value.total.value();
        t.small_ball_share = total > 0 ? s.value.small_ball.value() / total : 0.0;
        t.terms = s.value.terms_used;
        t.termwise_max_rel_err = s.termwise_max_rel_err;
        rep.rhs += t.contribution;
        rep.termwise_max_rel_err = std::max(rep.termwise_max_rel_err, t.termwise_max_rel_err);
        rep.terms.push_back(t);
      }
    }
  }
  rep.package_first = rep.moments.s1 * k;
  rep.package_second =
      rep.moments.s2 * bound_rhs<double>(k, static_cast<double>(N), 0.0, Term2Exponent::eleven_halves).term2;
  rep.fitted_constant = rep.rhs / (rep.package_first + rep.package_second);
  rep.termwise_ok = rep.termwise_max_rel_err <= 1e-8;
  return rep;
}

}  // namespace ampsup::amplifier
