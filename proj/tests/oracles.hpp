#pragma once

// Brute-force reference implementations used by the unit and acceptance tests.

#include <cstdint>
#include <set>
#include <vector>

#include "ampsup/lattice.hpp"
#include "ampsup/order.hpp"

namespace oracle {

using ampsup::geometry::UhpPoint;
using ampsup::quaternion::Order;
using ampsup::quaternion::OrderVector;

const Order& default_order();

/// Every order element of norm n with cosh d(z, alpha z) <= cap, found by scanning
/// a coordinate box derived from an independently built Gram matrix.
std::set<OrderVector> box_scan(const Order& order, std::int64_t n, const UhpPoint& z, double cap);

/// Number of classes of the given elements under alpha ~ beta iff alpha conj(beta) / n
/// lies in the order, decided with exact rationals.
std::size_t exact_coset_count(const Order& order, const std::vector<OrderVector>& elements, std::int64_t n);

/// (a,b)_p from a primitive-solution search for a x^2 + b y^2 = z^2 modulo p^e.
int hilbert_by_search(std::int64_t a, std::int64_t b, std::int64_t p);

}  // namespace oracle
