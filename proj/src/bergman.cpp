#include "ampsup/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <omp.h>

namespace ampsup::bergman {

namespace detail {

void check_weight(int k) {
  if (k < 4) throw InputError("weight must be at least 4");
  if (k % 2 != 0) throw InputError("odd weight: the cusp-form space is zero since -Id lies in Gamma");
}

namespace {

double log_prefactor(int k) { return std::log((k - 1) / (4.0 * std::numbers::pi)); }

// log of ((k-1)/4pi)(2i)^k (yv)^{k/2} (z - conj(gamma w))^{-k} conj(j(gamma,w))^{-k}
KernelTerm make_term(const Order& order, const lattice::BallPoint& p, const UhpPoint& z, const UhpPoint& w, int k) {
  const auto m = order.real_image(p.coords);
  const auto gw = geometry::mobius(m, w);
  const double kk = static_cast<double>(k);
  KernelTerm t;
  t.cosh_dist = p.cosh_dist;
  t.coords = p.coords;
  t.log_magnitude = log_prefactor(k) - 0.5 * kk * std::log1p(geometry::u_value(z, gw));
  const std::complex<double> gap{z.x - gw.x, z.y + gw.y};
  const std::complex<double> j_conj{m.c * w.x + m.d, -m.c * w.y};
  const std::complex<double> fixed{log_prefactor(k) + kk * std::numbers::ln2 + 0.5 * kk * (std::log(z.y) + std::log(w.y)),
                                   0.5 * kk * std::numbers::pi};
  t.log_signed = fixed - kk * std::log(gap) - kk * std::log(j_conj);
  return t;
}

}  // namespace

std::vector<KernelTerm> kernel_terms(const Order& order, std::span<const lattice::BallPoint> points, const UhpPoint& z,
                                     const UhpPoint& w, int k) {
  std::vector<KernelTerm> out(points.size());
  const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = make_term(order, points[static_cast<std::size_t>(i)], z, w, k);
  }
  return out;
}

namespace serial {
std::vector<KernelTerm> kernel_terms(const Order& order, std::span<const lattice::BallPoint> points,
                                     const UhpPoint& z, const UhpPoint& w, int k) {
  std::vector<KernelTerm> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(make_term(order, p, z, w, k));
  return out;
}
}  // namespace serial

TailEstimate estimate_tail(std::span<const double> cosh_half, double cosh_cap, int k) {
  TailEstimate est;
  const double r_cap = std::sqrt((1.0 + cosh_cap) / 2.0);
  double inner = 0, outer = 0;
  for (double c : cosh_half) {
    if (c > r_cap / 2 && c <= r_cap * (1.0 + 1e-9)) {
      outer += 1;
    } else if (c > r_cap / 4 && c <= r_cap / 2) {
      inner += 1;
    }
  }
  if (inner == 0 || outer == 0) return est;
  est.growth = std::max(4.0, outer / inner);
  const double log_q = std::log(est.growth) - k * std::numbers::ln2;
  if (!(log_q < 0)) return est;
  const double log_edge = log_prefactor(k) - k * std::log(r_cap);
  est.bound = std::exp(std::numbers::ln2 + std::log(est.growth) + std::log(outer) + log_edge - std::log(-std::expm1(log_q)));
  return est;
}

KernelEvaluation assemble(std::vector<KernelTerm> terms, const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                          const KernelOptions& options) {
  std::stable_sort(terms.begin(), terms.end(), [](const KernelTerm& l, const KernelTerm& r) {
    if (l.cosh_dist != r.cosh_dist) return l.cosh_dist < r.cosh_dist;
    return l.coords < r.coords;
  });
  KernelEvaluation ev;
  ev.z = z;
  ev.w = w;
  ev.k = k;
  ev.cosh_cap = cosh_cap;
  ev.psl = options.psl;
  ev.terms_used = terms.size();

  std::vector<double> logs(terms.size());
  std::vector<double> halves(terms.size());
  std::vector<std::complex<double>> signed_logs(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    logs[i] = terms[i].log_magnitude;
    halves[i] = std::sqrt((1.0 + terms[i].cosh_dist) / 2.0);
    signed_logs[i] = terms[i].log_signed;
  }
  ev.magnitude_bound = log_sum_exp(logs);
  ev.signed_value = sum_log_complex(signed_logs);
  ev.tail = estimate_tail(halves, cosh_cap, k);
  if (options.psl) {
    ev.magnitude_bound.log_abs -= std::numbers::ln2;
    ev.signed_value.scale -= std::numbers::ln2;
    ev.tail.bound /= 2.0;
  }
  if (options.tolerance && !(ev.tail.bound <= *options.tolerance)) {
    throw PrecisionError("kernel tail bound " + std::to_string(ev.tail.bound) + " exceeds tolerance " +
                         std::to_string(*options.tolerance) + " at cosh cap " + std::to_string(cosh_cap) +
                         "; increase the cap");
  }
  return ev;
}

}  // namespace detail

LogScaledReal term_magnitude(double distance, int k) {
  detail::check_weight(k);
  if (!(distance >= 0)) throw InputError("term_magnitude: distance must be >= 0");
  // log cosh(d/2) = d/2 + log1p(exp(-d)) - log 2, stable for large d
  const double half = 0.5 * distance;
  const double log_cosh = half + std::log1p(std::exp(-distance)) - std::numbers::ln2;
  return LogScaledReal::from_log(std::log((k - 1) / (4.0 * std::numbers::pi)) - k * log_cosh);
}

KernelEvaluation kernel_petersson(const Order& order, const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                                  const KernelOptions& options) {
  detail::check_weight(k);
  const auto ball = lattice::enumerate_ball(order, 1, z, w, cosh_cap, options.enumeration);
  return detail::assemble(detail::kernel_terms(order, ball.points, z, w, k), z, w, k, cosh_cap, options);
}

UnitCache::UnitCache(const Order& order, const UhpPoint& center, double cosh_cap, const EnumerationOptions& options)
    : order_(&order), ball_(lattice::enumerate_ball(order, 1, center, cosh_cap, options)) {}

bool UnitCache::covers(const UhpPoint& z, const UhpPoint& w, double cosh_cap) const {
  const double spread = geometry::dist(ball_.z, z) + geometry::dist(ball_.z, w);
  return cosh_cap * std::exp(spread) <= ball_.cosh_cap;
}

KernelEvaluation UnitCache::kernel_petersson(const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                                             const KernelOptions& options) const {
  detail::check_weight(k);
  if (!covers(z, w, cosh_cap)) throw InputError("UnitCache: cached ball does not cover the requested cap");
  std::vector<lattice::BallPoint> pts;
  for (const auto& p : ball_.points) {
    const double cd = lattice::cosh_displacement(*order_, p.coords, z, w);
    if (lattice::within_cap(cd, cosh_cap)) pts.push_back({p.coords, cd});
  }
  return detail::assemble(detail::kernel_terms(*order_, pts, z, w, k), z, w, k, cosh_cap, options);
}

HeckeKernelValue hecke_translate_kernel(const Order& order, const UhpPoint& z, std::int64_t n, int k, double cosh_cap,
                                        const KernelOptions& options) {
  detail::check_weight(k);
  if (n < 1) throw InputError("hecke_translate_kernel: n must be positive");
  if (std::gcd(n, order.level()) != 1) throw InputError("hecke_translate_kernel: n must be coprime to the level D");
  const auto ball = lattice::enumerate_ball(order, n, z, cosh_cap, options.enumeration);

  const double small_cut = 1.0 / (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n));
  const double pre = std::log((k - 1) / (4.0 * std::numbers::pi));
  std::vector<std::pair<double, double>> terms(ball.points.size());  // (cosh d, log magnitude)
  std::vector<double> small_logs, rest_logs;
  for (std::size_t i = 0; i < ball.points.size(); ++i) {
    const auto& p = ball.points[i];
    const auto gz = geometry::mobius(order.real_image(p.coords), z);
    const double u = geometry::u_value(z, gz);
    terms[i] = {p.cosh_dist, pre - 0.5 * k * std::log1p(u)};
    (u <= small_cut ? small_logs : rest_logs).push_back(terms[i].second);
  }
  std::stable_sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<double> logs(terms.size()), halves(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    halves[i] = std::sqrt((1.0 + terms[i].first) / 2.0);
    logs[i] = terms[i].second;
  }

  HeckeKernelValue out;
  out.n = n;
  out.k = k;
  out.cosh_cap = cosh_cap;
  out.total = log_sum_exp(logs);
  out.small_ball = log_sum_exp(small_logs);
  out.remainder = log_sum_exp(rest_logs);
  out.tail = detail::estimate_tail(halves, cosh_cap, k);
  out.terms_used = terms.size();
  out.small_ball_terms = small_logs.size();
  if (options.tolerance && !(out.tail.bound <= *options.tolerance)) {
    throw PrecisionError("hecke kernel tail bound exceeds tolerance; increase the cap");
  }
  return out;
}

}  // namespace ampsup::bergman
