#include "ampsup/amplifier.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "ampsup/arith.hpp"

namespace ampsup::amplifier {

std::vector<std::int64_t> AmplifierPlan::support() const {
  std::vector<std::int64_t> out;
  for (const auto& e : entries) out.push_back(e.n);
  return out;
}

AmplifierPlan build_amplifier(std::int64_t N, std::int64_t D) {
  if (N < 4) throw InputError("build_amplifier: N must be at least 4");
  if (D < 1) throw InputError("build_amplifier: D must be positive");
  AmplifierPlan plan;
  plan.N = N;
  plan.D = D;
  const auto root = arith::isqrt(N);
  for (auto p : arith::primes_up_to(static_cast<std::int64_t>(root))) {
    if (D % p == 0) continue;
    plan.entries.push_back({p, p, Role::prime});
    plan.entries.push_back({p * p, p, Role::negative_one});
    ++plan.prime_count;
  }
  std::sort(plan.entries.begin(), plan.entries.end(),
            [](const AmplifierEntry& l, const AmplifierEntry& r) { return l.n < r.n; });
  return plan;
}

double EigenvalueBoundModel::eta_bound(std::int64_t n) const {
  if (n < 1) throw InputError("eta_bound: n must be positive");
  return static_cast<double>(arith::divisor_count(n)) * std::pow(static_cast<double>(n), epsilon);
}

double EigenvalueBoundModel::alpha_bound(const AmplifierEntry& e) const {
  return e.role == Role::prime ? eta_bound(e.p) : 1.0;
}

MomentSums moment_sums(const AmplifierPlan& plan, const EigenvalueBoundModel& model) {
  if (plan.empty()) {
    throw InputError("degenerate amplifier: no primes p <= sqrt(" + std::to_string(plan.N) + ") coprime to " +
                     std::to_string(plan.D));
  }
  MomentSums s;
  double abs_sum = 0;
  for (const auto& e : plan.entries) {
    const double a = model.alpha_bound(e);
    s.s1 += a * a;
    abs_sum += a;
  }
  s.s2 = abs_sum * abs_sum;
  s.L = static_cast<double>(plan.prime_count) * static_cast<double>(plan.prime_count);
  return s;
}

TailIntegral tail_integral(std::int64_t n, int k) {
  if (n < 1) throw InputError("tail_integral: n must be positive");
  if (k < 6) throw InputError("tail_integral: k must be at least 6");
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double a = std::pow(static_cast<double>(n), -3.0);
  const double h = 0.5 * k;
  TailIntegral t;
  double err1 = 0, err2 = 0;
  // shift to [0, inf) so the mass sits at the left endpoint
  t.first = Quad::integrate([&](double v) { return std::exp(-h * std::log1p(a + v)); }, 0.0,
                            std::numeric_limits<double>::infinity(), 20, 1e-14, &err1);
  t.first_closed = std::exp((1.0 - h) * std::log1p(a)) / (h - 1.0);
  // u = t^4 removes the u^{-3/4} singularity
  const double t0 = std::pow(a, 0.25);
  t.second = Quad::integrate([&](double s) { return 4.0 * std::exp(-h * std::log1p(s * s * s * s)); }, t0,
                             std::numeric_limits<double>::infinity(), 20, 1e-14, &err2);
  t.error_estimate = err1 * t.first + err2 * t.second;
  return t;
}

TailCheckReport tail_estimate_check(std::int64_t n_max, const std::vector<int>& ks, double eps) {
  if (n_max < 2) throw InputError("tail_estimate_check: n_max must be at least 2");
  TailCheckReport rep;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    const double n3 = nd * nd * nd;
    for (int k : ks) {
      const auto ti = tail_integral(n, k);
      TailCheckRow row;
      row.n = n;
      row.k = k;
      row.lhs = std::pow(nd, 1.0 + eps) * k * ti.total();
      row.shape = std::exp((3.25 + eps) * std::log(nd) + 0.5 * k * std::log(n3 / (n3 + 1.0)));
      row.ratio = row.lhs / row.shape;
      rep.fitted_constant = std::max(rep.fitted_constant, row.ratio);
      rep.rows.push_back(row);
    }
  }
  return rep;
}

double balanced_N(double k) {
  if (!(k >= 100)) throw InputError("optimal_N: k must be at least 100");
  auto f = [k](double N) {
    const double l = std::log(N);
    return std::make_pair(12.0 * N * N * N * l - k, 12.0 * N * N * (3.0 * l + 1.0));
  };
  const double hi = std::cbrt(k);
  const double guess = std::clamp(std::cbrt(k / (12.0 * std::log(std::cbrt(k / 12.0)))), 1.0, hi);
  std::uintmax_t iters = 200;
  return boost::math::tools::newton_raphson_iterate(f, guess, 1.0, hi, 52, iters);
}

OptimalN optimal_N(double k, double eps, Term2Exponent exponent) {
  OptimalN out;
  out.N_balanced = balanced_N(k);
  out.residual = std::fabs(12.0 * std::pow(out.N_balanced, 3) * std::log(out.N_balanced) - k);
  out.rhs_balanced = bound_rhs<double>(k, out.N_balanced, eps, exponent).rhs;
  const auto cap = static_cast<std::int64_t>(std::ceil(std::cbrt(k)));
  out.rhs_grid = std::numeric_limits<double>::infinity();
  for (std::int64_t N = 2; N <= std::max<std::int64_t>(cap, 2); ++N) {
    const double r = bound_rhs<double>(k, static_cast<double>(N), eps, exponent).rhs;
    if (r < out.rhs_grid) {
      out.rhs_grid = r;
      out.N_grid = N;
    }
  }
  return out;
}

BoundCurve bound_curve(double k_min, double k_max, int samples, const FitOptions& options) {
  if (samples < 2) throw InputError("bound_curve: need at least 2 samples");
  if (!(k_min >= 100) || !(k_max > k_min)) throw InputError("bound_curve: need 100 <= k_min < k_max");
  BoundCurve curve;
  curve.rows.resize(static_cast<std::size_t>(samples));
  const double lo = std::log(k_min), hi = std::log(k_max);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < samples; ++i) {
    const double k = std::exp(lo + (hi - lo) * i / (samples - 1));
    const double N = balanced_N(k);
    const auto t = bound_rhs<double>(k, N, options.eps, options.exponent);
    auto& row = curve.rows[static_cast<std::size_t>(i)];
    row.k = k;
    row.N = N;
    row.term1 = t.term1;
    row.term2 = options.include_term2 ? t.term2 : 0.0;
    row.rhs = row.term1 + row.term2;
  }
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    auto& r = curve.rows[i];
    if (i == 0) {
      r.log_slope = std::numeric_limits<double>::quiet_NaN();
    } else {
      const auto& p = curve.rows[i - 1];
      r.log_slope = (std::log(r.rhs) - std::log(p.rhs)) / (std::log(r.k) - std::log(p.k));
    }
  }
  return curve;
}

ExponentFit exponent_fit(double k_min, double k_max, int samples, const FitOptions& options) {
  if (!(k_max / k_min >= 1e3)) throw InputError("exponent_fit: k_max / k_min must be at least 1000");
  ExponentFit fit;
  fit.curve = bound_curve(k_min, k_max, samples, options);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(fit.curve.rows.size());
  for (const auto& r : fit.curve.rows) {
    const double x = std::log(r.k), y = std::log(r.rhs);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / m;
  return fit;
}

}  // namespace ampsup::amplifier
