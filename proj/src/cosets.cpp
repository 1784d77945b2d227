#include <algorithm>
#include <numeric>

#include "ampsup/arith.hpp"
#include "ampsup/lattice.hpp"

namespace ampsup::lattice {

bool same_coset(const Order& order, const OrderVector& alpha, const OrderVector& beta, std::int64_t n) {
  if (n < 1) throw InputError("same_coset: norm must be positive");
  if (order.norm(alpha) != n || order.norm(beta) != n) throw InputError("same_coset: both elements need norm n");
  const auto prod = order.multiply(alpha, order.conjugate(beta));
  return std::all_of(prod.begin(), prod.end(), [n](std::int64_t v) { return v % n == 0; });
}

bool same_coset(const Order& order, const quaternion::QuaternionElement& alpha,
                const quaternion::QuaternionElement& beta, std::int64_t n) {
  if (quaternion::norm(alpha) != n || quaternion::norm(beta) != n) {
    throw InputError("same_coset: both elements need norm n");
  }
  const auto a = order.coordinates(alpha);
  const auto b = order.coordinates(beta);
  if (!a || !b) throw InputError("same_coset: element outside the order");
  return same_coset(order, *a, *b, n);
}

std::ptrdiff_t CosetDecomposition::find(const Order& order, const OrderVector& alpha) const {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (same_coset(order, alpha, reps[i], n)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

namespace {

CosetDecomposition stabilized_reps(const Order& order, std::int64_t n, const CosetOptions& options) {
  if (n < 1) throw InputError("coset_reps: n must be positive");
  std::vector<std::size_t> counts;
  double cap = options.initial_cap;
  while (true) {
    auto ball = enumerate_ball(order, n, options.base, cap, options.enumeration);
    auto pts = std::move(ball.points);
    std::stable_sort(pts.begin(), pts.end(),
                     [](const BallPoint& l, const BallPoint& r) { return l.cosh_dist < r.cosh_dist; });
    CosetDecomposition dec;
    dec.n = n;
    dec.cosh_cap = cap;
    for (const auto& p : pts) {
      if (dec.find(order, p.coords) < 0) dec.reps.push_back(p.coords);
    }
    dec.degree = dec.reps.size();
    counts.push_back(dec.degree);
    const auto m = counts.size();
    if (m >= 3 && dec.degree > 0 && counts[m - 1] == counts[m - 2] && counts[m - 2] == counts[m - 3]) return dec;
    cap *= 2.0;
    if (cap > options.max_cap) {
      throw ResourceError("coset_reps(" + std::to_string(n) + "): count did not stabilise below cosh cap " +
                          std::to_string(options.max_cap));
    }
  }
}

}  // namespace

DegreeTable::DegreeTable(const Order& order, CosetOptions options) : order_(&order), options_(options) {}

const CosetDecomposition& DegreeTable::decomposition(std::int64_t n) {
  if (auto it = cache_.find(n); it != cache_.end()) return it->second;
  auto dec = stabilized_reps(*order_, n, options_);
  if (options_.audit && n > 1 && std::gcd(n, order_->level()) == 1) {
    const auto p = arith::factorize(n).front().first;
    const auto m = n / p;
    if (m > 1) {
      // deg(p) deg(m) = deg(pm) + [p | m] p deg(m/p)
      std::size_t rhs = dec.degree;
      if (m % p == 0) rhs += static_cast<std::size_t>(p) * degree(m / p);
      const std::size_t lhs = degree(p) * degree(m);
      if (lhs != rhs) {
        throw ResourceError("coset_reps(" + std::to_string(n) + "): degree audit failed (" + std::to_string(lhs) +
                            " != " + std::to_string(rhs) + ")");
      }
    }
    dec.audited = true;
  }
  return cache_.emplace(n, std::move(dec)).first->second;
}

std::size_t DegreeTable::degree(std::int64_t n) { return decomposition(n).degree; }

bool DegreeTable::relation_holds(std::int64_t m, std::int64_t n) {
  std::size_t rhs = 0;
  for (auto d : arith::divisors(std::gcd(m, n))) rhs += static_cast<std::size_t>(d) * degree(m * n / (d * d));
  return degree(m) * degree(n) == rhs;
}

CosetDecomposition coset_reps(const Order& order, std::int64_t n, const CosetOptions& options) {
  DegreeTable table(order, options);
  return table.decomposition(n);
}

}  // namespace ampsup::lattice
