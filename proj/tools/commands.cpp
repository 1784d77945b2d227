#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ampsup/amplifier.hpp"
#include "ampsup/arith.hpp"
#include "ampsup/bergman.hpp"
#include "ampsup/lattice.hpp"

namespace ampsup::cli {

using quaternion::MaximalOrderConfig;
using quaternion::Order;

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string config_hash(const MaximalOrderConfig& cfg) {
  const std::string text = quaternion::config_to_json(cfg).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

lattice::EnumerationOptions enumeration(const Globals& g) {
  lattice::EnumerationOptions o;
  o.budget = g.budget_elements;
  return o;
}

geometry::UhpPoint point(const Point& p) { return geometry::make_point(p.x, p.y); }

std::string coords_csv(const Order& order, const quaternion::OrderVector& c) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) s += std::to_string(c[i]) + ",";
  const auto r = order.rational_coordinates(order.element(c));
  for (std::size_t i = 0; i < 4; ++i) s += quaternion::to_string(r[i]) + (i < 3 ? "," : "");
  return s;
}

}  // namespace

Summary cmd_verify(const Globals&, const MaximalOrderConfig& cfg, std::ostream& out, int& status) {
  const auto report = quaternion::verify_order(cfg.basis());
  auto j = quaternion::report_to_json(report);
  out << j.dump(2) << "\n";
  status = report.all_pass() ? 0 : 3;
  return {{"all_pass", report.all_pass()}};
}

Summary cmd_enum(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  const auto z = point(a.z);
  const auto w = a.w ? point(*a.w) : z;
  const auto ball = lattice::enumerate_ball(order, a.n, z, w, a.cap, enumeration(g));
  out << "c0,c1,c2,c3,x0,x1,x2,x3,cosh_dist\n";
  for (const auto& p : ball.points) out << coords_csv(order, p.coords) << "," << fmt(p.cosh_dist) << "\n";
  return {{"size", ball.size()}, {"size_mod_sign", ball.size_mod_sign()}};
}

Summary cmd_cosets(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  lattice::CosetOptions opts;
  opts.enumeration = enumeration(g);
  const auto dec = lattice::coset_reps(order, a.n, opts);
  out << "index,c0,c1,c2,c3,x0,x1,x2,x3\n";
  for (std::size_t i = 0; i < dec.reps.size(); ++i) out << i << "," << coords_csv(order, dec.reps[i]) << "\n";
  return {{"degree", dec.degree}, {"cosh_cap", dec.cosh_cap}, {"audited", dec.audited}};
}

Summary cmd_count(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  const auto ball = lattice::counting_function(order, a.n, point(a.z), a.rho, enumeration(g));
  out << "n,rho,count,count_mod_sign\n";
  out << a.n << "," << fmt(a.rho) << "," << ball.size() << "," << ball.size_mod_sign() << "\n";
  return {{"count", ball.size()}};
}

namespace {

bergman::KernelOptions kernel_options(const Globals& g, const Args& a) {
  bergman::KernelOptions o;
  o.psl = a.psl;
  o.tolerance = a.tol;
  o.enumeration = enumeration(g);
  return o;
}

// Replaces the double-precision magnitude by the 50-digit recomputation over the same ball.
double magnitude_log(const Globals& g, const Order& order, const geometry::UhpPoint& z, const geometry::UhpPoint& w,
                     const bergman::KernelEvaluation& ev, const Args& a) {
  if (g.precision == Precision::double_) return ev.magnitude_bound.log_abs;
  const auto ball = lattice::enumerate_ball(order, 1, z, w, a.cap, enumeration(g));
  double l = bergman::log_magnitude_extended(order, ball.points, z, w, a.k);
  if (a.psl) l -= std::log(2.0);
  return l;
}

}  // namespace

Summary cmd_kernel(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  const auto z = point(a.z);
  const auto w = a.w ? point(*a.w) : z;
  const auto ev = bergman::kernel_petersson(order, z, w, a.k, a.cap, kernel_options(g, a));
  const auto s = ev.signed_petersson();
  out << "z_x,z_y,w_x,w_y,k,cosh_cap,signed_re,signed_im,magnitude_log10,tail_bound,tail_label,terms_used\n";
  out << fmt(z.x) << "," << fmt(z.y) << "," << fmt(w.x) << "," << fmt(w.y) << "," << a.k << "," << fmt(a.cap) << ","
      << fmt(s.real()) << "," << fmt(s.imag()) << "," << fmt(magnitude_log(g, order, z, w, ev, a) / std::log(10.0))
      << "," << fmt(ev.tail_bound()) << "," << ev.tail.label() << "," << ev.terms_used << "\n";
  return {{"terms_used", ev.terms_used}, {"tail_bound", fmt(ev.tail_bound())}};
}

Summary cmd_kernel_grid(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  if (a.box.size() != 4 || a.grid.size() != 2) throw InputError("kernel-grid: --box needs 4 values, --grid 2");
  const auto order = Order::build(cfg);
  const auto pts = geometry::sample_grid({a.box[0], a.box[1], a.box[2], a.box[3]}, a.grid[0], a.grid[1]);
  out << "x,y,k,cosh_cap,signed_re,signed_im,magnitude_log10,tail_bound,terms_used\n";
  for (const auto& z : pts) {
    const auto ev = bergman::kernel_petersson(order, z, z, a.k, a.cap, kernel_options(g, a));
    const auto s = ev.signed_petersson();
    out << fmt(z.x) << "," << fmt(z.y) << "," << a.k << "," << fmt(a.cap) << "," << fmt(s.real()) << ","
        << fmt(s.imag()) << "," << fmt(magnitude_log(g, order, z, z, ev, a) / std::log(10.0)) << ","
        << fmt(ev.tail_bound()) << "," << ev.terms_used << "\n";
  }
  return {{"points", pts.size()}};
}

Summary cmd_hecke_kernel(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  const auto z = point(a.z);
  const auto v = bergman::hecke_translate_kernel(order, z, a.n, a.k, a.cap, kernel_options(g, a));
  double total_log = v.total.log_abs;
  if (g.precision == Precision::extended) {
    const auto ball = lattice::enumerate_ball(order, a.n, z, a.cap, enumeration(g));
    total_log = bergman::log_magnitude_extended(order, ball.points, z, z, a.k);
  }
  const double ln10 = std::log(10.0);
  out << "n,k,value_log10,small_ball_part,tail_part,terms_used\n";
  out << a.n << "," << a.k << "," << fmt(total_log / ln10) << "," << fmt(v.small_ball.value()) << ","
      << fmt(v.tail.bound) << "," << v.terms_used << "\n";
  return {{"terms_used", v.terms_used}, {"tail_label", v.tail.label()}};
}

Summary cmd_iw_sar(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  const auto rows = lattice::iw_sar_report(order, a.n_max, point(a.z), a.k, a.cap, enumeration(g));
  out << "n,small_ball_count,small_ball_sum,remainder_sum,comparison,terms\n";
  for (const auto& r : rows) {
    out << r.n << "," << r.small_ball_count << "," << fmt(r.small_ball_sum) << "," << fmt(r.remainder_sum) << ","
        << fmt(r.comparison) << "," << r.terms << "\n";
  }
  return {{"rows", rows.size()}};
}

Summary cmd_bound(const Globals& g, const Args& a, std::ostream& out) {
  const auto exponent =
      a.alt_exponent ? amplifier::Term2Exponent::thirteen_halves : amplifier::Term2Exponent::eleven_halves;
  Summary s;
  out << "k,N,term1,term2,rhs,term2_log10\n";
  auto row = [&](double N) {
    if (g.precision == Precision::extended) {
      using Big = boost::multiprecision::cpp_bin_float_50;
      const auto t = amplifier::bound_rhs<Big>(Big(a.k), Big(N), Big(a.eps), exponent);
      out << a.k << "," << fmt(N) << "," << fmt(static_cast<double>(t.term1)) << ","
          << fmt(static_cast<double>(t.term2)) << "," << fmt(static_cast<double>(t.rhs)) << ","
          << fmt(static_cast<double>(t.log_term2 / log(Big(10)))) << "\n";
    } else {
      const auto t = amplifier::bound_rhs<double>(a.k, N, a.eps, exponent);
      out << a.k << "," << fmt(N) << "," << fmt(t.term1) << "," << fmt(t.term2) << "," << fmt(t.rhs) << ","
          << fmt(t.log_term2 / std::log(10.0)) << "\n";
    }
  };
  if (a.N) {
    if (!(*a.N >= 1)) throw InputError("bound: N must be >= 1");
    row(*a.N);
  } else {
    const auto opt = amplifier::optimal_N(a.k, a.eps, exponent);
    row(opt.N_balanced);
    row(static_cast<double>(opt.N_grid));
    s["N_balanced"] = fmt(opt.N_balanced);
    s["N_grid"] = opt.N_grid;
  }
  return s;
}

Summary cmd_curve(const Globals&, const Args& a, std::ostream& out) {
  amplifier::FitOptions o;
  o.include_term2 = !a.no_term2;
  o.eps = a.eps;
  o.exponent = a.alt_exponent ? amplifier::Term2Exponent::thirteen_halves : amplifier::Term2Exponent::eleven_halves;
  const auto fit = amplifier::exponent_fit(a.kmin, a.kmax, a.samples, o);
  out << "k,N,term1,term2,rhs,log_slope\n";
  for (const auto& r : fit.curve.rows) {
    out << fmt(r.k) << "," << fmt(r.N) << "," << fmt(r.term1) << "," << fmt(r.term2) << "," << fmt(r.rhs) << ","
        << fmt(r.log_slope) << "\n";
  }
  return {{"slope", fit.slope}, {"intercept", fit.intercept}};
}

Summary cmd_check_tail(const Globals&, const Args& a, std::ostream& out) {
  std::vector<int> ks;
  std::stringstream ss(a.ks);
  for (std::string item; std::getline(ss, item, ',');) ks.push_back(std::stoi(item));
  const auto rep = amplifier::tail_estimate_check(a.n_max, ks, a.eps);
  out << "n,k,lhs,shape,ratio\n";
  for (const auto& r : rep.rows) {
    out << r.n << "," << r.k << "," << fmt(r.lhs) << "," << fmt(r.shape) << "," << fmt(r.ratio) << "\n";
  }
  return {{"fitted_constant", fmt(rep.fitted_constant)}};
}

Summary cmd_check_amplified(const Globals& g, const MaximalOrderConfig& cfg, const Args& a, std::ostream& out) {
  const auto order = Order::build(cfg);
  if (!a.N) throw InputError("check-amplified: --N is required");
  bergman::KernelOptions o;
  o.enumeration = enumeration(g);
  const auto rep = amplifier::amplified_inequality_check(order, point(a.z), a.k,
                                                         static_cast<std::int64_t>(std::llround(*a.N)), a.cap, o);
  nlohmann::json j;
  j["k"] = rep.k;
  j["N"] = rep.N;
  j["z"] = {fmt(rep.z.x), fmt(rep.z.y)};
  j["cosh_cap"] = fmt(rep.cosh_cap);
  j["moments"] = {{"S1", fmt(rep.moments.s1)}, {"S2", fmt(rep.moments.s2)}, {"L", fmt(rep.moments.L)}};
  for (const auto& t : rep.terms) {
    j["terms"].push_back({{"m", t.m},
                          {"n", t.n},
                          {"d", t.d},
                          {"frak_n", t.frak_n},
                          {"alpha_weight", fmt(t.alpha_weight)},
                          {"hecke_log", fmt(t.hecke_log)},
                          {"contribution", fmt(t.contribution)},
                          {"small_ball_share", fmt(t.small_ball_share)},
                          {"terms", t.terms},
                          {"termwise_max_rel_err", fmt(t.termwise_max_rel_err)}});
  }
  j["rhs"] = fmt(rep.rhs);
  j["package_first"] = fmt(rep.package_first);
  j["package_second"] = fmt(rep.package_second);
  j["fitted_constant"] = fmt(rep.fitted_constant);
  j["termwise_max_rel_err"] = fmt(rep.termwise_max_rel_err);
  j["termwise_ok"] = rep.termwise_ok;
  out << j.dump(2) << "\n";
  return {{"termwise_ok", rep.termwise_ok}, {"fitted_constant", fmt(rep.fitted_constant)}};
}

}  // namespace ampsup::cli
