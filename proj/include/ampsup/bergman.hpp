#pragma once

// Weight-k Bergman kernel of the cusp-form space, evaluated from its Poincaré
// series
//
//   B(z,w) = (k-1)(2i)^k / (4 pi) * sum_{gamma in Gamma} (z - conj(gamma w))^{-k} conj(j(gamma,w))^{-k},
//
// truncated to the gamma with cosh d(z, gamma w) <= cap. Each term's Petersson
// magnitude is ((k-1)/4pi) cosh^{-k}(d(z, gamma w)/2).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "ampsup/lattice.hpp"
#include "ampsup/logscaled.hpp"

namespace ampsup::bergman {

using geometry::UhpPoint;
using lattice::EnumerationOptions;
using lattice::LatticeBall;
using quaternion::Order;
using quaternion::OrderVector;

/// log((k-1)/(4 pi)) - k log cosh(d/2), templated for the extended-precision cross-checks.
template <typename Real>
Real log_term_magnitude(const Real& distance, int k) {
  using std::cosh;
  using std::log;
  const Real pi = boost::math::constants::pi<Real>();
  return log(Real(k - 1) / (4 * pi)) - Real(k) * log(cosh(distance / 2));
}

/// ((k-1)/(4 pi)) cosh^{-k}(d/2). Throws InputError for odd k, k < 4 or d < 0.
LogScaledReal term_magnitude(double distance, int k);

// Empirical tail majorant. With R = cosh(d_cap/2), the element counts in the shells
// cosh(d/2) in (R/4, R/2] and (R/2, R] give a growth factor g (at least 4, the area
// growth). Each later shell holds at most g times as many terms, each at most
// m(R) = ((k-1)/4pi) R^{-k}, so the tail is bounded by 2 g c_outer m(R) / (1 - g 2^{-k}).
// Infinite when a shell is empty or g 2^{-k} >= 1. Never a proof.
struct TailEstimate {
  double bound = std::numeric_limits<double>::infinity();
  double growth = std::numeric_limits<double>::quiet_NaN();
  bool empirical = true;

  const char* label() const { return "UNCERTIFIED-EMPIRICAL"; }
};

struct KernelOptions {
  bool psl = false;                  // halve the matrix-count sum (Gamma contains -Id)
  std::optional<double> tolerance;   // PrecisionError when the tail exceeds it
  EnumerationOptions enumeration;
};

struct KernelEvaluation {
  UhpPoint z;
  UhpPoint w;
  int k = 4;
  double cosh_cap = 1;
  bool psl = false;
  LogComplex signed_value;           // y^{k/2} v^{k/2} B(z,w)
  LogScaledReal magnitude_bound;     // sum of term magnitudes
  TailEstimate tail;
  std::size_t terms_used = 0;

  std::complex<double> signed_petersson() const { return signed_value.value(); }
  double magnitude() const { return magnitude_bound.value(); }
  double tail_bound() const { return tail.bound; }
};

/// Truncated |B(z,w)|_pet over gamma in Gamma with cosh d(z, gamma w) <= cosh_cap.
KernelEvaluation kernel_petersson(const Order& order, const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                                  const KernelOptions& options = {});

/// Gamma elements enumerated once around a centre and reused for nearby (z,w):
/// if cosh d(z, gamma w) <= C then cosh d(c, gamma c) <= C e^{d(c,z) + d(c,w)}.
class UnitCache {
 public:
  UnitCache(const Order& order, const UhpPoint& center, double cosh_cap, const EnumerationOptions& options = {});

  const LatticeBall& ball() const { return ball_; }
  bool covers(const UhpPoint& z, const UhpPoint& w, double cosh_cap) const;
  /// Same result as the free function; throws InputError when the cache does not cover.
  KernelEvaluation kernel_petersson(const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                                    const KernelOptions& options = {}) const;

 private:
  const Order* order_;
  LatticeBall ball_;
};

struct HeckeKernelValue {
  std::int64_t n = 1;
  int k = 4;
  double cosh_cap = 1;
  LogScaledReal total;       // ((k-1)/4pi) sum_{gamma in Gamma(n), in ball} cosh^{-k}(d(z, gamma z)/2)
  LogScaledReal small_ball;  // part with u(z, gamma z) <= n^{-3}
  LogScaledReal remainder;
  TailEstimate tail;
  std::size_t terms_used = 0;
  std::size_t small_ball_terms = 0;
};

/// T_n^{L2} |B(z,.)|_pet at z, majorised termwise. Requires gcd(n, D) = 1 and even k >= 4.
HeckeKernelValue hecke_translate_kernel(const Order& order, const UhpPoint& z, std::int64_t n, int k, double cosh_cap,
                                        const KernelOptions& options = {});

namespace detail {

struct KernelTerm {
  double cosh_dist = 1;
  OrderVector coords{};
  double log_magnitude = 0;
  std::complex<double> log_signed{};
};

// One term per ball element (which must have norm 1), in ball order. OpenMP-parallel.
std::vector<KernelTerm> kernel_terms(const Order& order, std::span<const lattice::BallPoint> points, const UhpPoint& z,
                                     const UhpPoint& w, int k);

namespace serial {
std::vector<KernelTerm> kernel_terms(const Order& order, std::span<const lattice::BallPoint> points,
                                     const UhpPoint& z, const UhpPoint& w, int k);
}  // namespace serial

// Orders terms by (distance, coordinates) and reduces them sequentially.
KernelEvaluation assemble(std::vector<KernelTerm> terms, const UhpPoint& z, const UhpPoint& w, int k, double cosh_cap,
                          const KernelOptions& options);

// Shell-count tail estimate from the cosh(d/2) values of the enumerated terms.
TailEstimate estimate_tail(std::span<const double> cosh_half, double cosh_cap, int k);

void check_weight(int k);

}  // namespace detail

}  // namespace ampsup::bergman

namespace ampsup::bergman {

/// log of sum_{gamma in points} ((k-1)/4pi) cosh^{-k}(d(z, gamma w)/2) with every step
/// (embedding, Mobius action, distance, log-sum-exp) in 50-digit binary floating point.
double log_magnitude_extended(const Order& order, std::span<const lattice::BallPoint> points, const UhpPoint& z,
                              const UhpPoint& w, int k);

}  // namespace ampsup::bergman
