#include "oracles.hpp"

#include <cmath>

namespace oracle {

using namespace ampsup;

const Order& default_order() {
  static const Order order = Order::build(quaternion::MaximalOrderConfig::default_instance());
  return order;
}

namespace {

std::array<std::array<double, 4>, 4> inverse(std::array<std::array<double, 4>, 4> m) {
  std::array<std::array<double, 4>, 4> inv{};
  for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < 4; ++r) {
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    }
    std::swap(m[c], m[piv]);
    std::swap(inv[c], inv[piv]);
    const double d = m[c][c];
    for (std::size_t j = 0; j < 4; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = m[r][c];
      for (std::size_t j = 0; j < 4; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

std::set<OrderVector> box_scan(const Order& order, std::int64_t n, const UhpPoint& z, double cap) {
  // Gram of the Frobenius form on g^{-1} M g, g = [[sqrt y, x/sqrt y],[0, 1/sqrt y]]
  const double s = std::sqrt(z.y);
  const geometry::RealMatrix2 g{s, z.x / s, 0, 1 / s};
  const geometry::RealMatrix2 gi{1 / s, -z.x / s, 0, s};
  std::array<geometry::RealMatrix2, 4> conj;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto m = quaternion::to_real<double>(quaternion::embed(order.basis().basis[i]));
    conj[i] = gi * m * g;
  }
  std::array<std::array<double, 4>, 4> gram{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      gram[i][j] = conj[i].a * conj[j].a + conj[i].b * conj[j].b + conj[i].c * conj[j].c + conj[i].d * conj[j].d;
    }
  }
  const auto inv = inverse(gram);
  const double q = 2.0 * n * cap * 1.001;
  std::array<std::int64_t, 4> r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = static_cast<std::int64_t>(std::ceil(std::sqrt(q * inv[i][i]))) + 1;

  std::set<OrderVector> out;
  OrderVector c;
  for (c[0] = -r[0]; c[0] <= r[0]; ++c[0]) {
    for (c[1] = -r[1]; c[1] <= r[1]; ++c[1]) {
      for (c[2] = -r[2]; c[2] <= r[2]; ++c[2]) {
        for (c[3] = -r[3]; c[3] <= r[3]; ++c[3]) {
          if (order.norm(c) != n) continue;
          const auto el = order.element(c);
          if (quaternion::norm(el) != n) continue;
          const auto m = quaternion::to_real<long double>(quaternion::embed(el));
          const auto zl = geometry::make_point<long double>(z.x, z.y);
          const double cd = static_cast<double>(geometry::cosh_dist(zl, geometry::mobius(m, zl)));
          if (cd <= cap * (1 + 1e-9)) out.insert(c);
        }
      }
    }
  }
  return out;
}

std::size_t exact_coset_count(const Order& order, const std::vector<OrderVector>& elements, std::int64_t n) {
  std::vector<quaternion::QuaternionElement> reps;
  const quaternion::Rational inv_n(1, n);
  for (const auto& c : elements) {
    const auto a = order.element(c);
    bool found = false;
    for (const auto& r : reps) {
      if (order.coordinates((a * quaternion::conjugate(r)).scaled(inv_n))) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(a);
  }
  return reps.size();
}

int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t p) {
  const std::int64_t mod = p == 2 ? 32 : p * p * p;
  auto red = [mod](std::int64_t v) { return ((v % mod) + mod) % mod; };
  std::vector<char> any_sq(static_cast<std::size_t>(mod)), unit_sq(static_cast<std::size_t>(mod));
  for (std::int64_t t = 0; t < mod; ++t) {
    any_sq[static_cast<std::size_t>(t * t % mod)] = 1;
    if (t % p != 0) unit_sq[static_cast<std::size_t>(t * t % mod)] = 1;
  }
  const std::int64_t am = red(a), bm = red(b);
  for (std::int64_t x = 0; x < mod; ++x) {
    for (std::int64_t y = 0; y < mod; ++y) {
      const auto lhs = static_cast<std::size_t>(red(am * x % mod * x + bm * y % mod * y));
      const bool primitive = x % p != 0 || y % p != 0;
      if (primitive ? any_sq[lhs] : unit_sq[lhs]) return 1;
    }
  }
  return -1;
}

}  // namespace oracle
