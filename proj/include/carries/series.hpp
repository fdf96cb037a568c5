#pragma once

#include <span>
#include <vector>

#include "carries/polynomial.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Coefficient of x^k in h(x)/(1-x)^p, i.e. sum_j h_j C(k - j + p - 1, p - 1).
/// Zero for k < 0. Requires p >= 1.
Rational series_coefficient(const Polynomial& h, int pole_order, long k);

/// Inverse of the expansion above on a finite prefix: multiplies the prefix by
/// (1-x)^p and truncates to the prefix length, giving
///   out_i = sum_{t=0}^{min(i,p)} (-1)^t C(p, t) a_{i-t}.
std::vector<Rational> numerator_from_series(std::span<const Rational> prefix, int pole_order);

}  // namespace carries
