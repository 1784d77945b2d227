#pragma once

// Exact arithmetic in the quaternion algebra (a,b / Q) with basis 1, i, j, ij
// (i^2 = a, j^2 = b, ij = -ji), the embedding into 2x2 matrices over Q(sqrt s),
// and the local (Hilbert symbol) ramification data.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ampsup/geometry.hpp"

namespace ampsup::quaternion {

// Always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Accepts "p/q", "p", surrounding whitespace and a leading sign.
Rational parse_rational(const std::string& text);
// "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);

struct AlgebraParams {
  std::int64_t a = -1;
  std::int64_t b = 3;

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

class QuaternionElement {
 public:
  QuaternionElement() = default;
  QuaternionElement(AlgebraParams algebra, std::array<Rational, 4> coords);

  static QuaternionElement scalar(AlgebraParams algebra, const Rational& s);
  // Basis element 1, i, j or ij for index 0..3.
  static QuaternionElement unit(AlgebraParams algebra, int index);

  const AlgebraParams& algebra() const { return algebra_; }
  const std::array<Rational, 4>& coords() const { return coords_; }
  const Rational& operator[](int idx) const { return coords_[static_cast<std::size_t>(idx)]; }

  QuaternionElement operator+(const QuaternionElement& o) const;
  QuaternionElement operator-(const QuaternionElement& o) const;
  QuaternionElement operator-() const;
  QuaternionElement operator*(const QuaternionElement& o) const;
  QuaternionElement scaled(const Rational& s) const;

  bool is_zero() const;
  friend bool operator==(const QuaternionElement& l, const QuaternionElement& r) {
    return l.algebra_ == r.algebra_ && l.coords_ == r.coords_;
  }

 private:
  AlgebraParams algebra_;
  std::array<Rational, 4> coords_;
};

QuaternionElement multiply(const QuaternionElement& alpha, const QuaternionElement& beta);
Rational norm(const QuaternionElement& alpha);
Rational trace(const QuaternionElement& alpha);
QuaternionElement conjugate(const QuaternionElement& alpha);

// u + v sqrt(radicand).
struct QuadExt {
  Rational u;
  Rational v;
  std::int64_t radicand = 0;

  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const;
  QuadExt operator*(const QuadExt& o) const;
  QuadExt conj() const { return {u, -v, radicand}; }
  double to_double() const;
  friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

// Which generator is sent to the diagonal matrix diag(sqrt s, -sqrt s).
enum class EmbeddingSlot { I, J };

struct EmbeddedMatrix {
  std::array<QuadExt, 4> entries;  // a, b, c, d
  std::int64_t radicand = 0;
  EmbeddingSlot slot = EmbeddingSlot::I;

  QuadExt det() const;
  QuadExt trace() const;
  EmbeddedMatrix operator*(const EmbeddedMatrix& o) const;
  friend bool operator==(const EmbeddedMatrix&, const EmbeddedMatrix&) = default;
};

/// Split embedding A -> M_2(Q(sqrt s)).
///
/// With a > 0 this is phi(x0 + x1 i + x2 j + x3 ij) =
///   [[x0 + x1 sqrt a, x2 + x3 sqrt a], [b (x2 - x3 sqrt a), x0 - x1 sqrt a]].
/// With a < 0 <= b the roles of i and j are exchanged so the image is real:
///   [[x0 + x2 sqrt b, x1 - x3 sqrt b], [a (x1 + x3 sqrt b), x0 - x2 sqrt b]].
/// Throws InputError when neither a nor b is positive.
EmbeddedMatrix embed(const QuaternionElement& alpha);

template <typename Real>
Real rational_to(const Rational& r) {
  return static_cast<Real>(Real(boost::multiprecision::numerator(r)) / Real(boost::multiprecision::denominator(r)));
}

/// Real image of an embedded matrix in the requested floating type.
template <typename Real = double>
geometry::BasicMatrix2<Real> to_real(const EmbeddedMatrix& m) {
  using std::sqrt;
  const Real root = sqrt(Real(m.radicand));
  auto entry = [&](const QuadExt& q) { return rational_to<Real>(q.u) + rational_to<Real>(q.v) * root; };
  return {entry(m.entries[0]), entry(m.entries[1]), entry(m.entries[2]), entry(m.entries[3])};
}

// A place of Q: a finite prime or the real place.
struct Place {
  std::int64_t prime = 0;  // 0 encodes infinity
  static Place infinity() { return {0}; }
  static Place finite(std::int64_t p) { return {p}; }
  bool is_infinite() const { return prime == 0; }
};

/// Hilbert symbol (a,b)_p in {+1,-1}; -1 exactly when (a,b / Q_p) is division.
/// Throws InputError for a == 0, b == 0 or a non-prime finite place.
int hilbert_symbol(std::int64_t a, std::int64_t b, Place p);

struct RamificationData {
  std::vector<std::int64_t> ramified_primes;
  std::int64_t q = 1;  // product of ramified primes (maximal order, q2 = 1)
  std::int64_t D = 1;  // level of the Jacquet-Langlands target; equals q here
};

/// Nonzero integer zero of x0^2 - a x1^2 - b x2^2 + ab x3^2 with all |x_i| <= height.
std::optional<std::array<std::int64_t, 4>> find_isotropic_vector(const AlgebraParams& params, int height);

/// Checks the split-at-infinity and bounded anisotropy invariants. Throws ConfigError.
void validate_params(const AlgebraParams& params, int height);

/// All primes dividing 2ab with Hilbert symbol -1. Throws VerificationError when
/// the count comes out odd.
RamificationData ramified_primes(const AlgebraParams& params, int height = 50);

}  // namespace ampsup::quaternion
