#pragma once

// Order elements of a fixed reduced norm inside hyperbolic balls, and the coset
// decomposition of Gamma \ Gamma(n).
//
// For alpha of norm n > 0 with real image M, the conjugate g_z^{-1} M g_w has
// squared Frobenius norm 2 n cosh d(z, M w). As a function of the integer
// coordinates of alpha this is a positive definite quadratic form (the
// majorant), so "d(z, alpha w) <= R" becomes an ellipsoid constraint and the
// ball can be found by pruned tree search on its Cholesky factor.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "ampsup/errors.hpp"
#include "ampsup/geometry.hpp"
#include "ampsup/order.hpp"

namespace ampsup::lattice {

using geometry::UhpPoint;
using quaternion::Order;
using quaternion::OrderVector;

struct MajorantForm {
  UhpPoint z;
  UhpPoint w;
  std::array<std::array<double, 4>, 4> gram{};
  // Q(c) = sum_i q_ii (c_i + sum_{j>i} q_ij c_j)^2 ; diagonal holds q_ii, upper triangle q_ij.
  std::array<std::array<double, 4>, 4> factor{};

  double value(const OrderVector& c) const;
};

/// Throws NumericalError when the Gram matrix is not numerically positive definite.
MajorantForm majorant(const Order& order, const UhpPoint& z);
MajorantForm majorant(const Order& order, const UhpPoint& z, const UhpPoint& w);

/// cosh d(z, alpha w) for the real image of alpha (det > 0 required).
double cosh_displacement(const Order& order, const OrderVector& alpha, const UhpPoint& z, const UhpPoint& w);

/// Ball membership shared by every enumeration route: cosh_dist <= cap (1 + 1e-9).
bool within_cap(double cosh_dist, double cosh_cap);

struct BallPoint {
  OrderVector coords;
  double cosh_dist;  // cosh d(z, alpha w)

  friend bool operator==(const BallPoint&, const BallPoint&) = default;
};

struct LatticeBall {
  std::int64_t n = 1;
  UhpPoint z;
  UhpPoint w;
  double cosh_cap = 1;
  std::vector<BallPoint> points;  // sorted by coordinate tuple
  bool partial = false;

  std::size_t size() const { return points.size(); }
  // +alpha and -alpha always occur together.
  std::size_t size_mod_sign() const { return points.size() / 2; }
};

struct EnumerationOptions {
  std::size_t budget = 20'000'000;  // maximum number of elements returned
  double prune_margin = 1e-6;       // relative slack on the majorant cap
};

class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, LatticeBall partial_ball)
      : ResourceError(what), partial(std::move(partial_ball)) {}
  LatticeBall partial;
};

/// All order elements alpha with N(alpha) = n and cosh d(z, alpha w) <= cosh_cap.
/// OpenMP-parallel over the outer two coordinate layers; output sorted by
/// coordinate tuple, so it does not depend on the thread count.
LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, double cosh_cap,
                           const EnumerationOptions& options = {});
LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, const UhpPoint& w,
                           double cosh_cap, const EnumerationOptions& options = {});

namespace serial {
// Single-threaded recursive reference for the parallel enumerator.
LatticeBall enumerate_ball(const Order& order, std::int64_t n, const UhpPoint& z, const UhpPoint& w,
                           double cosh_cap, const EnumerationOptions& options = {});
}  // namespace serial

/// S_{Gamma(n)}(z; rho): elements with u(z, alpha z) <= rho, i.e. cosh d <= 1 + 2 rho.
LatticeBall counting_function(const Order& order, std::int64_t n, const UhpPoint& z, double rho,
                              const EnumerationOptions& options = {});

/// alpha ~ beta under left multiplication by Gamma: alpha conj(beta) in n R.
/// Throws InputError unless N(alpha) = N(beta) = n.
bool same_coset(const Order& order, const quaternion::QuaternionElement& alpha,
                const quaternion::QuaternionElement& beta, std::int64_t n);
bool same_coset(const Order& order, const OrderVector& alpha, const OrderVector& beta, std::int64_t n);

struct CosetDecomposition {
  std::int64_t n = 1;
  std::vector<OrderVector> reps;
  std::size_t degree = 0;
  double cosh_cap = 0;  // cap at which the count was declared stable
  bool audited = false;

  /// Index of the representative equivalent to alpha, or -1.
  std::ptrdiff_t find(const Order& order, const OrderVector& alpha) const;
};

struct CosetOptions {
  UhpPoint base{0.0, 1.0};
  double initial_cap = 2.0;
  double max_cap = 4096.0;
  bool audit = true;
  EnumerationOptions enumeration;
};

/// Reps of Gamma \ Gamma(n), from balls of doubling radius until the count is
/// unchanged across two doublings. With audit on (and gcd(n, D) = 1) the Hecke
/// degree relation against the smallest prime factor of n is checked too.
/// Throws ResourceError on non-stabilisation or a failed audit.
CosetDecomposition coset_reps(const Order& order, std::int64_t n, const CosetOptions& options = {});

/// Memoised degrees deg(n) = |Gamma \ Gamma(n)|.
class DegreeTable {
 public:
  DegreeTable(const Order& order, CosetOptions options = {});
  std::size_t degree(std::int64_t n);
  const CosetDecomposition& decomposition(std::int64_t n);
  /// deg(m) deg(n) == sum_{d | (m,n)} d deg(mn/d^2).
  bool relation_holds(std::int64_t m, std::int64_t n);

 private:
  const Order* order_;
  CosetOptions options_;
  std::map<std::int64_t, CosetDecomposition> cache_;
};

struct IwSarRow {
  std::int64_t n = 0;
  std::size_t small_ball_count = 0;  // |S(z; n^-3)| as matrices
  double small_ball_sum = 0;         // sum of cosh^{-k}(d/2) over S(z; n^-3)
  double remainder_sum = 0;          // same sum over the rest of the enumerated ball
  double comparison = 0;             // n * integral_{n^-3}^inf (...) du; NaN when k < 6
  std::size_t terms = 0;
};

/// Small-ball / remainder split of sum cosh^{-k}(d(z, gamma z)/2) over Gamma(n)
/// for every n <= n_max coprime to the level, using balls of radius cosh_cap.
std::vector<IwSarRow> iw_sar_report(const Order& order, std::int64_t n_max, const UhpPoint& z, int k,
                                    double cosh_cap = 32.0, const EnumerationOptions& options = {});

}  // namespace ampsup::lattice
