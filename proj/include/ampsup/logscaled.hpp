#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>

namespace ampsup {

// sign * exp(log_abs). Products are exact in the exponent; sums go through a
// stable log-sum-exp, so weights in the thousands never overflow.
struct LogScaledReal {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static LogScaledReal zero() { return {}; }
  static LogScaledReal from_log(double log_value) { return {1, log_value}; }
  static LogScaledReal from_value(double v) {
    if (v == 0.0) return {};
    return {v > 0 ? 1 : -1, std::log(std::fabs(v))};
  }

  bool is_zero() const { return sign == 0; }
  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
  double log10_abs() const { return log_abs / std::log(10.0); }

  LogScaledReal operator*(const LogScaledReal& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {sign * o.sign, log_abs + o.log_abs};
  }

  LogScaledReal operator+(const LogScaledReal& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const bool self_big = log_abs >= o.log_abs;
    const auto& big = self_big ? *this : o;
    const auto& small = self_big ? o : *this;
    const double ratio = std::exp(small.log_abs - big.log_abs);
    if (big.sign == small.sign) return {big.sign, big.log_abs + std::log1p(ratio)};
    if (ratio == 1.0) return {};
    return {big.sign, big.log_abs + std::log1p(-ratio)};
  }
};

// Sum of exp(logs[i]) in the given order, all terms positive.
inline LogScaledReal log_sum_exp(std::span<const double> logs) {
  if (logs.empty()) return {};
  double top = -std::numeric_limits<double>::infinity();
  for (double l : logs) top = std::max(top, l);
  if (std::isinf(top) && top < 0) return {};
  double s = 0.0;
  for (double l : logs) s += std::exp(l - top);
  return {1, top + std::log(s)};
}

// mantissa * exp(scale)
struct LogComplex {
  std::complex<double> mantissa{0.0, 0.0};
  double scale = 0.0;

  std::complex<double> value() const { return mantissa * std::exp(scale); }
  double log_abs() const { return std::log(std::abs(mantissa)) + scale; }
};

// Sum of exp(log_terms[i]) with a common exponent taken from the largest real part.
inline LogComplex sum_log_complex(std::span<const std::complex<double>> log_terms) {
  LogComplex out;
  if (log_terms.empty()) return out;
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& l : log_terms) top = std::max(top, l.real());
  out.scale = top;
  for (const auto& l : log_terms) out.mantissa += std::exp(l - top);
  return out;
}

}  // namespace ampsup
