#include "ampsup/quaternion.hpp"

#include <algorithm>
#include <cctype>

#include "ampsup/arith.hpp"
#include "ampsup/errors.hpp"

namespace ampsup::quaternion {

Rational parse_rational(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n\r");
  auto last = text.find_last_not_of(" \t\n\r");
  if (first == std::string::npos) throw ConfigError("empty rational literal");
  const std::string t = text.substr(first, last - first + 1);
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  auto to_int = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return Integer(s);
  };
  const auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw ConfigError("malformed rational literal '" + text + "'");
    return Rational(to_int(t));
  }
  const std::string num = t.substr(0, slash);
  const std::string den = t.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ConfigError("malformed rational literal '" + text + "'");
  const Integer d = to_int(den);
  if (d == 0) throw ConfigError("zero denominator in '" + text + "'");
  return Rational(to_int(num), d);
}

std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

QuaternionElement::QuaternionElement(AlgebraParams algebra, std::array<Rational, 4> coords)
    : algebra_(algebra), coords_(std::move(coords)) {}

QuaternionElement QuaternionElement::scalar(AlgebraParams algebra, const Rational& s) {
  return {algebra, {s, 0, 0, 0}};
}

QuaternionElement QuaternionElement::unit(AlgebraParams algebra, int index) {
  std::array<Rational, 4> c{0, 0, 0, 0};
  c.at(static_cast<std::size_t>(index)) = 1;
  return {algebra, c};
}

namespace {
void require_same(const AlgebraParams& l, const AlgebraParams& r) {
  if (!(l == r)) throw ConfigError("quaternion operands come from different algebras");
}
}  // namespace

QuaternionElement QuaternionElement::operator+(const QuaternionElement& o) const {
  require_same(algebra_, o.algebra_);
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = coords_[i] + o.coords_[i];
  return {algebra_, c};
}

QuaternionElement QuaternionElement::operator-(const QuaternionElement& o) const {
  require_same(algebra_, o.algebra_);
  std::array<Rational, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i] = coords_[i] - o.coords_[i];
  return {algebra_, c};
}

QuaternionElement QuaternionElement::operator-() const {
  return {algebra_, {-coords_[0], -coords_[1], -coords_[2], -coords_[3]}};
}

QuaternionElement QuaternionElement::operator*(const QuaternionElement& o) const {
  require_same(algebra_, o.algebra_);
  const Rational a = algebra_.a;
  const Rational b = algebra_.b;
  const auto& x = coords_;
  const auto& y = o.coords_;
  // i^2 = a, j^2 = b, (ij)^2 = -ab, i(ij) = a j, (ij)i = -a j, j(ij) = -b i, (ij)j = b i
  return {algebra_,
          {x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - a * b * x[3] * y[3],
           x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2],
           x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1],
           x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1]}};
}

QuaternionElement QuaternionElement::scaled(const Rational& s) const {
  return {algebra_, {coords_[0] * s, coords_[1] * s, coords_[2] * s, coords_[3] * s}};
}

bool QuaternionElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

QuaternionElement multiply(const QuaternionElement& alpha, const QuaternionElement& beta) { return alpha * beta; }

Rational norm(const QuaternionElement& alpha) {
  const Rational a = alpha.algebra().a;
  const Rational b = alpha.algebra().b;
  return alpha[0] * alpha[0] - a * alpha[1] * alpha[1] - b * alpha[2] * alpha[2] + a * b * alpha[3] * alpha[3];
}

Rational trace(const QuaternionElement& alpha) { return 2 * alpha[0]; }

QuaternionElement conjugate(const QuaternionElement& alpha) {
  return {alpha.algebra(), {alpha[0], -alpha[1], -alpha[2], -alpha[3]}};
}

QuadExt QuadExt::operator+(const QuadExt& o) const { return {u + o.u, v + o.v, radicand}; }
QuadExt QuadExt::operator-(const QuadExt& o) const { return {u - o.u, v - o.v, radicand}; }
QuadExt QuadExt::operator*(const QuadExt& o) const {
  return {u * o.u + Rational(radicand) * v * o.v, u * o.v + v * o.u, radicand};
}
double QuadExt::to_double() const {
  return rational_to<double>(u) + rational_to<double>(v) * std::sqrt(static_cast<double>(radicand));
}

QuadExt EmbeddedMatrix::det() const { return entries[0] * entries[3] - entries[1] * entries[2]; }
QuadExt EmbeddedMatrix::trace() const { return entries[0] + entries[3]; }

EmbeddedMatrix EmbeddedMatrix::operator*(const EmbeddedMatrix& o) const {
  const auto& l = entries;
  const auto& r = o.entries;
  return {{l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2], l[2] * r[1] + l[3] * r[3]},
          radicand,
          slot};
}

EmbeddedMatrix embed(const QuaternionElement& alpha) {
  const auto& p = alpha.algebra();
  const auto& x = alpha.coords();
  if (p.a > 0) {
    const auto s = p.a;
    const Rational b = p.b;
    return {{QuadExt{x[0], x[1], s}, QuadExt{x[2], x[3], s}, QuadExt{b * x[2], -b * x[3], s},
             QuadExt{x[0], -x[1], s}},
            s,
            EmbeddingSlot::I};
  }
  if (p.b > 0) {
    // (a,b) = (b,a) via i' = j, j' = i, i'j' = -ij.
    const auto s = p.b;
    const Rational a = p.a;
    return {{QuadExt{x[0], x[2], s}, QuadExt{x[1], -x[3], s}, QuadExt{a * x[1], a * x[3], s},
             QuadExt{x[0], -x[2], s}},
            s,
            EmbeddingSlot::J};
  }
  throw InputError("embed: algebra is not split at infinity (a < 0 and b < 0)");
}

int hilbert_symbol(std::int64_t a, std::int64_t b, Place place) {
  if (a == 0 || b == 0) throw InputError("hilbert_symbol: arguments must be nonzero");
  if (place.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const std::int64_t p = place.prime;
  if (!arith::is_prime(p)) throw InputError("hilbert_symbol: " + std::to_string(p) + " is not prime");
  const int alpha = arith::valuation(a, p);
  const int beta = arith::valuation(b, p);
  std::int64_t u = a;
  std::int64_t v = b;
  for (int i = 0; i < alpha; ++i) u /= p;
  for (int i = 0; i < beta; ++i) v /= p;
  if (p == 2) {
    auto mod8 = [](std::int64_t t) { return ((t % 8) + 8) % 8; };
    auto eps = [&](std::int64_t t) { return ((mod8(t) - 1) / 2) % 2; };
    auto omega = [&](std::int64_t t) {
      const auto r = mod8(t);
      return (r == 3 || r == 5) ? 1 : 0;
    };
    const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return (e % 2 == 0) ? 1 : -1;
  }
  int result = 1;
  if ((static_cast<std::int64_t>(alpha) * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) result = -result;
  if (beta % 2 == 1) result *= arith::jacobi(u, p);
  if (alpha % 2 == 1) result *= arith::jacobi(v, p);
  return result;
}

std::optional<std::array<std::int64_t, 4>> find_isotropic_vector(const AlgebraParams& params, int height) {
  const __int128 a = params.a;
  const __int128 b = params.b;
  const __int128 h = height;
  for (std::int64_t x1 = -height; x1 <= height; ++x1) {
    for (std::int64_t x2 = -height; x2 <= height; ++x2) {
      for (std::int64_t x3 = -height; x3 <= height; ++x3) {
        if (x1 == 0 && x2 == 0 && x3 == 0) continue;
        const __int128 t = a * x1 * x1 + b * x2 * x2 - a * b * x3 * x3;
        if (t < 0 || t > h * h || !arith::is_square(t)) continue;
        return std::array<std::int64_t, 4>{static_cast<std::int64_t>(arith::isqrt(t)), x1, x2, x3};
      }
    }
  }
  return std::nullopt;
}

namespace {

RamificationData compute_ramification(const AlgebraParams& params) {
  RamificationData out;
  for (auto [p, e] : arith::factorize(2 * params.a * params.b)) {
    (void)e;
    if (hilbert_symbol(params.a, params.b, Place::finite(p)) == -1) out.ramified_primes.push_back(p);
  }
  for (auto p : out.ramified_primes) out.q *= p;
  out.D = out.q;
  return out;
}

}  // namespace

void validate_params(const AlgebraParams& params, int height) {
  if (params.a == 0 || params.b == 0) throw ConfigError("algebra parameters must be nonzero");
  if (params.a < 0 && params.b < 0) throw ConfigError("algebra is definite (not split at infinity)");
  if (auto v = find_isotropic_vector(params, height)) {
    throw ConfigError("norm form is isotropic at (" + std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) +
                      "," + std::to_string((*v)[2]) + "," + std::to_string((*v)[3]) + ")");
  }
  if (compute_ramification(params).ramified_primes.empty()) {
    throw ConfigError("no ramified primes: the algebra is the matrix algebra");
  }
}

RamificationData ramified_primes(const AlgebraParams& params, int height) {
  validate_params(params, height);
  auto out = compute_ramification(params);
  if (out.ramified_primes.size() % 2 != 0) {
    throw VerificationError("odd number of ramified primes; Hilbert symbol evaluation is inconsistent");
  }
  return out;
}

}  // namespace ampsup::quaternion
