#pragma once

// Amplification calculus: amplifier support, moment sums, the small-ball tail
// integral, the final two-term bound and its optimisation in N.

#include <cmath>
#include <cstdint>
#include <vector>

#include "ampsup/bergman.hpp"
#include "ampsup/errors.hpp"

namespace ampsup::amplifier {

enum class Role { prime, negative_one };

struct AmplifierEntry {
  std::int64_t n = 0;
  std::int64_t p = 0;  // the prime behind n (n = p or n = p^2)
  Role role = Role::prime;
};

struct AmplifierPlan {
  std::int64_t N = 0;
  std::int64_t D = 1;
  std::vector<AmplifierEntry> entries;  // sorted by n
  std::int64_t prime_count = 0;         // #{p <= sqrt N, p does not divide D}

  bool empty() const { return entries.empty(); }
  std::vector<std::int64_t> support() const;
};

/// alpha_p = eta_f(p) for p <= sqrt N, alpha_{p^2} = -1 for p^2 <= N, both only for p coprime to D.
AmplifierPlan build_amplifier(std::int64_t N, std::int64_t D);

// Worst-case stand-in for the normalised Hecke eigenvalues: |eta_f(n)| <= d(n) n^eps.
struct EigenvalueBoundModel {
  double epsilon = 0.0;

  double eta_bound(std::int64_t n) const;
  /// Cap on |alpha_n| for an amplifier entry.
  double alpha_bound(const AmplifierEntry& e) const;
};

struct MomentSums {
  double s1 = 0;  // sum |alpha_n|^2
  double s2 = 0;  // (sum |alpha_n|)^2
  double L = 0;   // prime_count^2
};

/// Throws InputError for an empty (degenerate) amplifier.
MomentSums moment_sums(const AmplifierPlan& plan, const EigenvalueBoundModel& model = {});

struct TailIntegral {
  double first = 0;         // int_{n^-3}^inf (1+u)^{-k/2} du, by quadrature
  double first_closed = 0;  // (1 + n^-3)^{1-k/2} / (k/2 - 1)
  double second = 0;        // int_{n^-3}^inf u^{-3/4} (1+u)^{-k/2} du
  double error_estimate = 0;

  double total() const { return first + second; }
};

/// Requires k >= 6 and n >= 1 (InputError otherwise).
TailIntegral tail_integral(std::int64_t n, int k);

struct TailCheckRow {
  std::int64_t n = 0;
  int k = 0;
  double lhs = 0;    // n^{1+eps} k I(n,k)
  double shape = 0;  // n^{13/4+eps} (n^3/(n^3+1))^{k/2}
  double ratio = 0;
};

struct TailCheckReport {
  std::vector<TailCheckRow> rows;
  double fitted_constant = 0;  // max ratio over the scan
  bool finite() const { return std::isfinite(fitted_constant); }
};

TailCheckReport tail_estimate_check(std::int64_t n_max, const std::vector<int>& ks, double eps = 0.0);

// Exponent of N in the second term of the final bound. The final display uses
// 11/2; the intermediate display before division by the prime count has 13/2.
enum class Term2Exponent { eleven_halves, thirteen_halves };

inline double term2_power(Term2Exponent e) { return e == Term2Exponent::eleven_halves ? 5.5 : 6.5; }

template <typename Real>
struct BoundTerms {
  Real term1;
  Real log_term2;
  Real term2;
  Real rhs;
};

/// term1 = k / N^{1/2 - eps}, term2 = N^{p + eps} (1 - 1/(N^3+1))^{k/2}, term2 formed in the log domain.
template <typename Real>
BoundTerms<Real> bound_rhs(const Real& k, const Real& N, const Real& eps,
                           Term2Exponent exponent = Term2Exponent::eleven_halves) {
  using std::exp;
  using std::log;
  using std::pow;
  BoundTerms<Real> out;
  out.term1 = k / pow(N, Real(0.5) - eps);
  const Real n3 = N * N * N;
  out.log_term2 = (Real(term2_power(exponent)) + eps) * log(N) + (k / 2) * log(n3 / (n3 + 1));
  out.term2 = exp(out.log_term2);
  out.rhs = out.term1 + out.term2;
  return out;
}

struct OptimalN {
  double N_balanced = 0;  // root of 12 N^3 ln N = k
  double rhs_balanced = 0;
  std::int64_t N_grid = 0;  // integer argmin of bound_rhs over 2..ceil(k^{1/3})
  double rhs_grid = 0;
  double residual = 0;  // |12 N^3 ln N - k|
};

/// Newton iteration for 12 N^3 ln N = k plus an integer grid search. Requires k >= 100.
OptimalN optimal_N(double k, double eps = 0.0, Term2Exponent exponent = Term2Exponent::eleven_halves);

/// Solves 12 N^3 ln N = k only.
double balanced_N(double k);

struct BoundRow {
  double k = 0;
  double N = 0;
  double term1 = 0;
  double term2 = 0;
  double rhs = 0;
  double log_slope = 0;  // slope of log rhs against log k from the previous row; NaN on the first
};

struct BoundCurve {
  std::vector<BoundRow> rows;
};

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  BoundCurve curve;
};

struct FitOptions {
  bool include_term2 = true;  // false gives the term1-only ablation
  double eps = 0.0;
  Term2Exponent exponent = Term2Exponent::eleven_halves;
};

/// Least-squares slope of log rhs(k, N_balanced(k)) against log k on log-spaced samples.
/// Requires k_max / k_min >= 1000 and samples >= 2.
ExponentFit exponent_fit(double k_min, double k_max, int samples, const FitOptions& options = {});

/// The same curve without the range precondition.
BoundCurve bound_curve(double k_min, double k_max, int samples, const FitOptions& options = {});

// Amplified inequality desk check.

struct AmplifiedTerm {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t frak_n = 0;          // mn / d^2
  double alpha_weight = 0;          // |alpha_m alpha_n| under the caps
  double hecke_log = 0;             // log of the Hecke-translated kernel sum
  double contribution = 0;          // alpha_weight * d / sqrt(mn) * hecke value
  double small_ball_share = 0;      // fraction of the Hecke value from u <= frak_n^-3
  std::size_t terms = 0;
  double termwise_max_rel_err = 0;  // prefactor bookkeeping vs direct term magnitude
};

struct AmplifiedReport {
  double k = 0;
  std::int64_t N = 0;
  geometry::UhpPoint z;
  double cosh_cap = 0;
  std::vector<AmplifiedTerm> terms;
  MomentSums moments;
  double rhs = 0;            // sum of contributions
  double package_first = 0;  // S1 * k
  double package_second = 0; // S2 * N^{11/2} (1 - 1/(N^3+1))^{k/2}
  double fitted_constant = 0;
  double termwise_max_rel_err = 0;
  bool termwise_ok = false;
};

AmplifiedReport amplified_inequality_check(const quaternion::Order& order, const geometry::UhpPoint& z, int k,
                                           std::int64_t N, double cosh_cap = 64.0,
                                           const bergman::KernelOptions& options = {});

}  // namespace ampsup::amplifier
