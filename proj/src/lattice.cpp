#include "ampsup/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include <omp.h>

#include "ampsup/arith.hpp"

namespace ampsup::lattice {

double MajorantForm::value(const OrderVector& c) const {
  double s = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) s += gram[i][j] * static_cast<double>(c[i]) * static_cast<double>(c[j]);
  }
  return s;
}

MajorantForm majorant(const Order& order, const UhpPoint& z) { return majorant(order, z, z); }

MajorantForm majorant(const Order& order, const UhpPoint& z, const UhpPoint& w) {
  if (!(z.y > 0) || !(w.y > 0)) throw InputError("majorant: points must lie in the upper half-plane");
  MajorantForm f;
  f.z = z;
  f.w = w;
  const auto left = geometry::translation_from(z);
  const auto right = geometry::translation_to(w);
  std::array<geometry::RealMatrix2, 4> conj{};
  for (std::size_t i = 0; i < 4; ++i) conj[i] = left * order.basis_images()[i] * right;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& p = conj[i];
      const auto& q = conj[j];
      f.gram[i][j] = p.a * q.a + p.b * q.b + p.c * q.c + p.d * q.d;
    }
  }
  auto& q = f.factor;
  q = f.gram;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!(q[i][i] > 1e-12 * f.gram[i][i])) {
      throw NumericalError("majorant is not numerically positive definite (extreme base point?)");
    }
    for (std::size_t j = i + 1; j < 4; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t l = i + 1; l < 4; ++l) {
      for (std::size_t m = l; m < 4; ++m) q[l][m] -= q[l][i] * q[i][m];
    }
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < i; ++j) q[i][j] = 0;
  }
  return f;
}

double cosh_displacement(const Order& order, const OrderVector& alpha, const UhpPoint& z, const UhpPoint& w) {
  const auto m = order.real_image(alpha);
  return geometry::cosh_dist(z, geometry::mobius(m, w));
}

bool within_cap(double cosh_dist, double cosh_cap) { return cosh_dist <= cosh_cap * (1.0 + 1e-9); }

namespace {

void check_args(std::int64_t n, double cosh_cap) {
  if (n < 1) throw InputError("enumerate_ball: norm must be a positive integer");
  if (!(cosh_cap >= 1.0)) throw InputError("enumerate_ball: cosh_cap must be >= 1");
}

// Innermost level: the norm equation N(c) = n is quadratic in c_0, so c_0 is
// solved exactly instead of scanned.
class LeafSolver {
 public:
  LeafSolver(const Order& order, std::int64_t n, const UhpPoint& z, const UhpPoint& w, double cap)
      : order_(order), form_(order.norm_form()), n_(n), z_(z), w_(w), cap_(cap) {}

  template <typename Sink>
  void solve(OrderVector& c, Sink&& sink) const {
    const __int128 a = form_[0][0];
    const __int128 b = static_cast<__int128>(form_[0][1]) * c[1] + static_cast<__int128>(form_[0][2]) * c[2] +
                       static_cast<__int128>(form_[0][3]) * c[3];
    __int128 rest = -static_cast<__int128>(n_);
    for (std::size_t i = 1; i < 4; ++i) {
      for (std::size_t j = i; j < 4; ++j) rest += static_cast<__int128>(form_[i][j]) * c[i] * c[j];
    }
    const __int128 disc = b * b - 4 * a * rest;
    if (disc < 0 || !arith::is_square(disc)) return;
    const __int128 s = arith::isqrt(disc);
    const __int128 den = 2 * a;
    const __int128 roots[2] = {-b + s, -b - s};
    for (int r = 0; r < (s == 0 ? 1 : 2); ++r) {
      if (roots[r] % den != 0) continue;
      c[0] = static_cast<std::int64_t>(roots[r] / den);
      const double cd = cosh_displacement(order_, c, z_, w_);
      if (within_cap(cd, cap_)) sink(BallPoint{c, cd});
    }
  }

 private:
  const Order& order_;
  const std::array<std::array<std::int64_t, 4>, 4>& form_;
  std::int64_t n_;
  UhpPoint z_, w_;
  double cap_;
};

double level_center(const MajorantForm& f, std::size_t level, const OrderVector& c) {
  double s = 0;
  for (std::size_t j = level + 1; j < 4; ++j) s -= f.factor[level][j] * static_cast<double>(c[j]);
  return s;
}

void sort_points(std::vector<BallPoint>& pts) {
  std::sort(pts.begin(), pts.end(), [](const BallPoint& l, const BallPoint& r) { return l.coords < r.coords; });
}

LatticeBall make_ball(std::int64_t n, const UhpPoint& z, const UhpPoint& w, double cap) {
  LatticeBall ball;
  ball.n = n;
  ball.z = z;
  ball.w = w;
  ball.cosh_cap = cap;
  return ball;
}

struct Prefix {
  std::int64_t c3, c2;
  double residual;
};

}  // namespace

LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, double cosh_cap,
                           const EnumerationOptions& options) {
  return enumerate_ball(order, n, z, z, cosh_cap, options);
}

LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, const UhpPoint& w,
                           double cosh_cap, const EnumerationOptions& options) {
  check_args(n, cosh_cap);
  const auto form = majorant(order, z, w);
  const auto& q = form.factor;
  const double qcap = 2.0 * static_cast<double>(n) * cosh_cap * (1.0 + options.prune_margin);
  const LeafSolver leaf(order, n, z, w, cosh_cap);

  std::vector<Prefix> prefixes;
  {
    const double r3 = std::sqrt(qcap / q[3][3]);
    for (auto c3 = static_cast<std::int64_t>(std::ceil(-r3)); c3 <= static_cast<std::int64_t>(std::floor(r3)); ++c3) {
      const double t3 = qcap - q[3][3] * static_cast<double>(c3) * static_cast<double>(c3);
      if (t3 < 0) continue;
      const double center = -q[2][3] * static_cast<double>(c3);
      const double r2 = std::sqrt(t3 / q[2][2]);
      for (auto c2 = static_cast<std::int64_t>(std::ceil(center - r2));
           c2 <= static_cast<std::int64_t>(std::floor(center + r2)); ++c2) {
        const double d = static_cast<double>(c2) - center;
        const double t2 = t3 - q[2][2] * d * d;
        if (t2 >= 0) prefixes.push_back({c3, c2, t2});
      }
    }
  }

  std::vector<std::vector<BallPoint>> found(prefixes.size());
  std::atomic<std::size_t> total{0};
  std::atomic<bool> over{false};
  const auto count = static_cast<std::int64_t>(prefixes.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t p = 0; p < count; ++p) {
    if (over.load(std::memory_order_relaxed)) continue;
    const auto& pre = prefixes[static_cast<std::size_t>(p)];
    auto& out = found[static_cast<std::size_t>(p)];
    OrderVector c{0, 0, pre.c2, pre.c3};
    const double center = level_center(form, 1, c);
    const double r1 = std::sqrt(pre.residual / q[1][1]);
    for (auto c1 = static_cast<std::int64_t>(std::ceil(center - r1));
         c1 <= static_cast<std::int64_t>(std::floor(center + r1)); ++c1) {
      c[1] = c1;
      leaf.solve(c, [&](const BallPoint& bp) {
        out.push_back(bp);
        if (total.fetch_add(1, std::memory_order_relaxed) + 1 > options.budget) over.store(true);
      });
    }
  }

  auto ball = make_ball(n, z, w, cosh_cap);
  for (auto& v : found) ball.points.insert(ball.points.end(), v.begin(), v.end());
  sort_points(ball.points);
  if (over.load()) {
    ball.partial = true;
    throw BudgetExceeded("enumerate_ball: element budget of " + std::to_string(options.budget) + " exceeded",
                         std::move(ball));
  }
  return ball;
}

namespace serial {

namespace {
struct Recursion {
  const MajorantForm& form;
  const LeafSolver& leaf;
  std::size_t budget;
  std::vector<BallPoint>& out;

  void descend(std::size_t level, OrderVector& c, double residual) {
    if (out.size() > budget) return;
    if (level == 0) {
      leaf.solve(c, [&](const BallPoint& bp) { out.push_back(bp); });
      return;
    }
    const double qll = form.factor[level][level];
    const double center = level_center(form, level, c);
    const double r = std::sqrt(residual / qll);
    for (auto x = static_cast<std::int64_t>(std::ceil(center - r)); x <= static_cast<std::int64_t>(std::floor(center + r));
         ++x) {
      const double d = static_cast<double>(x) - center;
      const double t = residual - qll * d * d;
      if (t < 0) continue;
      c[level] = x;
      descend(level - 1, c, t);
    }
    c[level] = 0;
  }
};
}  // namespace

LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, const UhpPoint& w,
                           double cosh_cap, const EnumerationOptions& options) {
  check_args(n, cosh_cap);
  const auto form = majorant(order, z, w);
  const double qcap = 2.0 * static_cast<double>(n) * cosh_cap * (1.0 + options.prune_margin);
  const LeafSolver leaf(order, n, z, w, cosh_cap);
  auto ball = make_ball(n, z, w, cosh_cap);
  Recursion rec{form, leaf, options.budget, ball.points};
  OrderVector c{0, 0, 0, 0};
  rec.descend(3, c, qcap);
  sort_points(ball.points);
  if (ball.points.size() > options.budget) {
    ball.partial = true;
    throw BudgetExceeded("enumerate_ball: element budget of " + std::to_string(options.budget) + " exceeded",
                         std::move(ball));
  }
  return ball;
}

}  // namespace serial

LatticeBall counting_function(const Order& order, std::int64_t n, const UhpPoint& z, double rho,
                              const EnumerationOptions& options) {
  if (!(rho >= 0)) throw InputError("counting_function: rho must be >= 0");
  return enumerate_ball(order, n, z, 1.0 + 2.0 * rho, options);
}

}  // namespace ampsup::lattice
