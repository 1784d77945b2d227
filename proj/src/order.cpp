#include "ampsup/order.hpp"

#include <limits>

#include "ampsup/errors.hpp"

namespace ampsup::quaternion {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Gauss-Jordan over Q. Returns nullopt for a singular matrix.
std::optional<RationalMatrix4> invert(RationalMatrix4 m, Rational* det_out = nullptr) {
  RationalMatrix4 inv{};
  for (std::size_t i = 0; i < 4; ++i) inv[i][i] = 1;
  Rational det = 1;
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t pivot = col;
    while (pivot < 4 && m[pivot][col] == 0) ++pivot;
    if (pivot == 4) {
      if (det_out) *det_out = 0;
      return std::nullopt;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      std::swap(inv[pivot], inv[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (std::size_t j = 0; j < 4; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t j = 0; j < 4; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  if (det_out) *det_out = det;
  return inv;
}

Rational determinant(const RationalMatrix4& m) {
  Rational det;
  (void)invert(m, &det);
  return det;
}

std::array<Rational, 4> solve_coords(const RationalMatrix4& inverse, const QuaternionElement& x) {
  // x = sum_i c_i e_i, with the rows of the basis matrix holding e_i: c = x B^{-1}.
  std::array<Rational, 4> c{};
  for (std::size_t j = 0; j < 4; ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < 4; ++i) s += x.coords()[i] * inverse[i][j];
    c[j] = s;
  }
  return c;
}

std::int64_t to_int64(const Rational& r) {
  const Integer n = numerator(r);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw VerificationError("order table entry does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace

OrderBasis OrderBasis::from_elements(const std::array<QuaternionElement, 4>& elements) {
  OrderBasis out{elements, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) out.gram[i][j] = trace(elements[i] * elements[j]);
  }
  return out;
}

VerificationReport verify_order(const OrderBasis& ob) {
  VerificationReport rep;
  const auto params = ob.basis[0].algebra();
  for (const auto& e : ob.basis) {
    if (!(e.algebra() == params)) {
      rep.failures.push_back("basis elements come from different algebras");
      return rep;
    }
  }

  RationalMatrix4 rows{};
  for (std::size_t i = 0; i < 4; ++i) rows[i] = ob.basis[i].coords();
  Rational basis_det;
  const auto inverse = invert(rows, &basis_det);
  rep.independent = inverse.has_value();
  if (!rep.independent) {
    rep.failures.push_back("basis is linearly dependent");
    return rep;
  }

  auto integral_coords = [&](const QuaternionElement& x) {
    const auto c = solve_coords(*inverse, x);
    for (const auto& v : c) {
      if (!is_integer(v)) return false;
    }
    return true;
  };

  rep.unit_containment = integral_coords(QuaternionElement::scalar(params, 1));
  if (!rep.unit_containment) rep.failures.push_back("unit containment: 1 is not an integral combination of the basis");

  rep.ring_closure = true;
  for (std::size_t i = 0; i < 4 && rep.ring_closure; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (!integral_coords(ob.basis[i] * ob.basis[j])) {
        rep.ring_closure = false;
        rep.failures.push_back("ring closure: e" + std::to_string(i) + "*e" + std::to_string(j) +
                               " has non-integral coordinates");
        break;
      }
    }
  }

  rep.integrality = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integer(trace(ob.basis[i])) || !is_integer(norm(ob.basis[i]))) {
      rep.integrality = false;
      rep.failures.push_back("integrality: e" + std::to_string(i) + " has non-integral reduced trace or norm");
    }
  }

  // Coordinates of the basis are at most as fractional as the index of the
  // basis lattice over Z<1,i,j,ij> allows.
  const Rational index = 1 / abs(basis_det);
  rep.denominators_bounded = true;
  if (is_integer(index)) {
    const Integer idx = numerator(index);
    for (const auto& e : ob.basis) {
      for (const auto& v : e.coords()) {
        if (idx % denominator(v) != 0) rep.denominators_bounded = false;
      }
    }
  } else {
    rep.denominators_bounded = false;
  }
  if (!rep.denominators_bounded) rep.failures.push_back("coordinate denominators exceed the lattice index");

  rep.discriminant = abs(determinant(ob.gram));
  try {
    const auto ram = ramified_primes(params);
    rep.ramified_primes = ram.ramified_primes;
    rep.expected_discriminant = Rational(ram.q) * Rational(ram.q);
    rep.discriminant_matches = rep.discriminant == rep.expected_discriminant;
    if (!rep.discriminant_matches) {
      rep.failures.push_back("discriminant " + to_string(rep.discriminant) + " differs from " +
                             to_string(rep.expected_discriminant) + ": order is not maximal");
    }
  } catch (const std::exception& e) {
    rep.failures.push_back(std::string("ramification: ") + e.what());
  }
  return rep;
}

MaximalOrderConfig MaximalOrderConfig::default_instance() {
  MaximalOrderConfig cfg;
  cfg.params = {-1, 3};
  const Rational h(1, 2);
  cfg.order_basis = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {h, h, h, h}}};
  cfg.height_check = 50;
  return cfg;
}

OrderBasis MaximalOrderConfig::basis() const {
  std::array<QuaternionElement, 4> elems;
  for (std::size_t i = 0; i < 4; ++i) elems[i] = QuaternionElement(params, order_basis[i]);
  return OrderBasis::from_elements(elems);
}

Order Order::build(const MaximalOrderConfig& config) {
  validate_params(config.params, config.height_check);
  Order o;
  o.params_ = config.params;
  o.basis_ = config.basis();
  o.report_ = verify_order(o.basis_);
  if (!o.report_.all_pass()) {
    std::string msg = "order verification failed:";
    for (const auto& f : o.report_.failures) msg += " [" + f + "]";
    throw VerificationError(msg);
  }
  o.ramification_ = ramified_primes(config.params, config.height_check);

  RationalMatrix4 rows{};
  for (std::size_t i = 0; i < 4; ++i) rows[i] = o.basis_.basis[i].coords();
  o.inverse_basis_ = *invert(rows);

  auto int_coords = [&](const QuaternionElement& x) {
    const auto c = solve_coords(o.inverse_basis_, x);
    OrderVector v{};
    for (std::size_t i = 0; i < 4; ++i) v[i] = to_int64(c[i]);
    return v;
  };
  const auto& e = o.basis_.basis;
  for (std::size_t i = 0; i < 4; ++i) {
    o.conj_[i] = int_coords(quaternion::conjugate(e[i]));
    o.traces_[i] = to_int64(quaternion::trace(e[i]));
    for (std::size_t j = 0; j < 4; ++j) o.mult_[i][j] = int_coords(e[i] * e[j]);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    o.norm_form_[i][i] = to_int64(quaternion::norm(e[i]));
    for (std::size_t j = i + 1; j < 4; ++j) o.norm_form_[i][j] = to_int64(quaternion::trace(e[i] * quaternion::conjugate(e[j])));
  }
  for (std::size_t i = 0; i < 4; ++i) o.images_[i] = to_real<double>(embed(e[i]));
  return o;
}

QuaternionElement Order::element(const OrderVector& c) const {
  std::array<Rational, 4> x{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t l = 0; l < 4; ++l) x[l] += Rational(c[i]) * basis_.basis[i].coords()[l];
  }
  return {params_, x};
}

std::array<Rational, 4> Order::rational_coordinates(const QuaternionElement& x) const {
  if (!(x.algebra() == params_)) throw ConfigError("element belongs to a different algebra");
  return solve_coords(inverse_basis_, x);
}

std::optional<OrderVector> Order::coordinates(const QuaternionElement& x) const {
  const auto c = rational_coordinates(x);
  OrderVector v{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!is_integer(c[i])) return std::nullopt;
    v[i] = to_int64(c[i]);
  }
  return v;
}

std::int64_t Order::norm(const OrderVector& c) const {
  __int128 s = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) s += static_cast<__int128>(norm_form_[i][j]) * c[i] * c[j];
  }
  return static_cast<std::int64_t>(s);
}

std::int64_t Order::trace(const OrderVector& c) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 4; ++i) s += traces_[i] * c[i];
  return s;
}

OrderVector Order::multiply(const OrderVector& l, const OrderVector& r) const {
  std::array<__int128, 4> acc{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    if (l[i] == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (r[j] == 0) continue;
      const __int128 f = static_cast<__int128>(l[i]) * r[j];
      for (std::size_t k = 0; k < 4; ++k) acc[k] += f * mult_[i][j][k];
    }
  }
  return {static_cast<std::int64_t>(acc[0]), static_cast<std::int64_t>(acc[1]), static_cast<std::int64_t>(acc[2]),
          static_cast<std::int64_t>(acc[3])};
}

OrderVector Order::conjugate(const OrderVector& c) const {
  OrderVector out{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = 0; k < 4; ++k) out[k] += c[i] * conj_[i][k];
  }
  return out;
}

geometry::RealMatrix2 Order::real_image(const OrderVector& c) const {
  geometry::RealMatrix2 m{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    const double s = static_cast<double>(c[i]);
    m.a += s * images_[i].a;
    m.b += s * images_[i].b;
    m.c += s * images_[i].c;
    m.d += s * images_[i].d;
  }
  return m;
}

}  // namespace ampsup::quaternion
