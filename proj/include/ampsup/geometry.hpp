#pragma once

// Upper half-plane geometry. Scalar routines are templated on the real type so
// the same code runs in double and in the extended (multiprecision) mode.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "ampsup/errors.hpp"

namespace ampsup::geometry {

template <typename Real>
struct BasicUhpPoint {
  Real x{0};
  Real y{1};
};
using UhpPoint = BasicUhpPoint<double>;

// Validating constructor; y must be strictly positive.
template <typename Real>
BasicUhpPoint<Real> make_point(Real x, Real y) {
  if (!(y > 0)) throw InputError("upper half-plane point needs y > 0");
  return {x, y};
}

template <typename Real>
struct BasicMatrix2 {
  Real a{1}, b{0}, c{0}, d{1};

  Real det() const { return a * d - b * c; }
  Real trace() const { return a + d; }
  Real frobenius2() const { return a * a + b * b + c * c + d * d; }

  BasicMatrix2 operator*(const BasicMatrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  BasicMatrix2 operator+(const BasicMatrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  BasicMatrix2 scaled(Real s) const { return {a * s, b * s, c * s, d * s}; }
};
using RealMatrix2 = BasicMatrix2<double>;

/// cosh^2(d(z,w)/2) = ((x-u)^2 + (y+v)^2) / (4yv).
template <typename Real>
Real cosh2_half_dist(const BasicUhpPoint<Real>& z, const BasicUhpPoint<Real>& w) {
  const Real dx = z.x - w.x;
  const Real sy = z.y + w.y;
  return (dx * dx + sy * sy) / (4 * z.y * w.y);
}

/// u(z,w) = sinh^2(d/2) = ((x-u)^2 + (y-v)^2) / (4yv), evaluated directly so it
/// keeps full relative accuracy when z and w nearly coincide.
template <typename Real>
Real u_value(const BasicUhpPoint<Real>& z, const BasicUhpPoint<Real>& w) {
  const Real dx = z.x - w.x;
  const Real dy = z.y - w.y;
  return (dx * dx + dy * dy) / (4 * z.y * w.y);
}

template <typename Real>
Real dist(const BasicUhpPoint<Real>& z, const BasicUhpPoint<Real>& w) {
  using std::acosh;
  using std::asinh;
  using std::sqrt;
  const Real c2 = cosh2_half_dist(z, w);
  if (c2 - 1 > Real(1e-8)) return 2 * acosh(sqrt(c2));
  return 2 * asinh(sqrt(u_value(z, w)));
}

/// cosh d(z,w) = 2 cosh^2(d/2) - 1 = 1 + 2u.
template <typename Real>
Real cosh_dist(const BasicUhpPoint<Real>& z, const BasicUhpPoint<Real>& w) {
  return 1 + 2 * u_value(z, w);
}

template <typename Real>
std::complex<Real> j_factor(const BasicMatrix2<Real>& m, const BasicUhpPoint<Real>& w) {
  return {m.c * w.x + m.d, m.c * w.y};
}

/// Möbius action of a matrix with positive determinant. The imaginary part is
/// produced from Im(mz) = det(m) Im(z) / |j(m,z)|^2.
template <typename Real>
BasicUhpPoint<Real> mobius(const BasicMatrix2<Real>& m, const BasicUhpPoint<Real>& z) {
  const Real det = m.det();
  if (!(det > 0)) throw InputError("mobius: determinant must be positive");
  const Real jr = m.c * z.x + m.d;
  const Real ji = m.c * z.y;
  const Real jn = jr * jr + ji * ji;
  // (az+b)(c conj(z) + d) = ac|z|^2 + bd + (ad + bc) x + i det y
  const Real x = (m.a * m.c * (z.x * z.x + z.y * z.y) + m.b * m.d + (m.a * m.d + m.b * m.c) * z.x) / jn;
  return {x, det * z.y / jn};
}

/// g_z = [[sqrt(y), x/sqrt(y)], [0, 1/sqrt(y)]], so that g_z i = z.
template <typename Real>
BasicMatrix2<Real> translation_to(const BasicUhpPoint<Real>& z) {
  using std::sqrt;
  const Real s = sqrt(z.y);
  return {s, z.x / s, Real(0), 1 / s};
}

template <typename Real>
BasicMatrix2<Real> translation_from(const BasicUhpPoint<Real>& z) {
  using std::sqrt;
  const Real s = sqrt(z.y);
  return {1 / s, -z.x / s, Real(0), s};
}

/// v^{k/2} |value|, evaluated through logarithms.
double petersson_magnitude(std::complex<double> value, const UhpPoint& w, int k);

struct Box {
  double x0, x1, y0, y1;
};

/// Deterministic nx-by-ny lattice over the box, row-major in y then x. Endpoints
/// are included when the count along an axis exceeds one.
std::vector<UhpPoint> sample_grid(const Box& box, std::size_t nx, std::size_t ny);

}  // namespace ampsup::geometry
