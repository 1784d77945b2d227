#pragma once

// Orders in a quaternion algebra: verification of a candidate basis and the
// verified runtime object used by the lattice and kernel code, which works on
// integer coordinates with respect to the order basis.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ampsup/geometry.hpp"
#include "ampsup/quaternion.hpp"

namespace ampsup::quaternion {

using RationalMatrix4 = std::array<std::array<Rational, 4>, 4>;

struct OrderBasis {
  std::array<QuaternionElement, 4> basis;
  RationalMatrix4 gram;  // Tr(e_i e_j)

  static OrderBasis from_elements(const std::array<QuaternionElement, 4>& elements);
};

struct VerificationReport {
  bool independent = false;
  bool unit_containment = false;
  bool ring_closure = false;
  bool integrality = false;
  bool discriminant_matches = false;
  bool denominators_bounded = false;
  Rational discriminant = 0;           // |det Tr(e_i e_j)|
  Rational expected_discriminant = 0;  // (product of ramified primes)^2
  std::vector<std::int64_t> ramified_primes;
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

/// Ring closure, integrality, unit containment and discriminant = (prod ramified)^2.
/// Never throws on a bad basis: every failed check is listed in the report.
VerificationReport verify_order(const OrderBasis& basis);

struct MaximalOrderConfig {
  AlgebraParams params;
  RationalMatrix4 order_basis;  // rows: coordinates of e_0..e_3 in 1, i, j, ij
  int height_check = 50;

  // (a,b) = (-1,3) with basis {1, i, j, (1+i+j+ij)/2}.
  static MaximalOrderConfig default_instance();
  OrderBasis basis() const;
};

using OrderVector = std::array<std::int64_t, 4>;

/// A verified order with its integer multiplication tables and the real images
/// of its basis under the split embedding.
class Order {
 public:
  /// Validates the algebra, runs verify_order and builds the tables. Throws
  /// ConfigError for invalid parameters and VerificationError when any check fails.
  static Order build(const MaximalOrderConfig& config);

  const AlgebraParams& params() const { return params_; }
  const OrderBasis& basis() const { return basis_; }
  const RamificationData& ramification() const { return ramification_; }
  const VerificationReport& report() const { return report_; }
  std::int64_t level() const { return ramification_.D; }

  QuaternionElement element(const OrderVector& c) const;
  std::array<Rational, 4> rational_coordinates(const QuaternionElement& x) const;
  // Coordinates when x lies in the order, otherwise nullopt.
  std::optional<OrderVector> coordinates(const QuaternionElement& x) const;

  std::int64_t norm(const OrderVector& c) const;
  std::int64_t trace(const OrderVector& c) const;
  OrderVector multiply(const OrderVector& l, const OrderVector& r) const;
  OrderVector conjugate(const OrderVector& c) const;

  // Reduced norm as an integral quadratic form: N(c) = sum_{i<=j} F_ij c_i c_j.
  const std::array<std::array<std::int64_t, 4>, 4>& norm_form() const { return norm_form_; }

  geometry::RealMatrix2 real_image(const OrderVector& c) const;
  const std::array<geometry::RealMatrix2, 4>& basis_images() const { return images_; }

 private:
  AlgebraParams params_;
  OrderBasis basis_{};
  RamificationData ramification_;
  VerificationReport report_;
  RationalMatrix4 inverse_basis_;
  std::array<std::array<OrderVector, 4>, 4> mult_{};
  std::array<OrderVector, 4> conj_{};
  std::array<std::int64_t, 4> traces_{};
  std::array<std::array<std::int64_t, 4>, 4> norm_form_{};
  std::array<geometry::RealMatrix2, 4> images_{};

  Order() = default;
};

}  // namespace ampsup::quaternion
