#pragma once

#include <vector>

#include "carries/polynomial.hpp"
#include "carries/rational.hpp"

namespace carries {

/// C(n, k), with C(n, k) = 0 whenever k < 0, k > n or n < 0.
///
/// The zero convention is what makes truncated alternating sums over
/// binomials come out right without explicit range checks at call sites.
Integer binomial(long n, long k);

Integer factorial(long n);

/// Eulerian numbers A(n, 0..n-1): permutations of n symbols by descent count.
struct EulerianTable {
    int n = 0;
    std::vector<Integer> values;
};

/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1). Throws DomainError for n < 1.
EulerianTable eulerian_numbers(int n);

/// A_n(x) = sum_k A(n,k) x^k. Throws DomainError for n < 1.
Polynomial eulerian_polynomial(int n);

// Number of ways to write i as y_1 + ... + y_n with each y in {0, ..., b-1},
// i.e. the coefficient of x^i in (1 + x + ... + x^{b-1})^n. Computed by
// inclusion-exclusion over digits that overflow:
//   sum_r (-1)^r C(n, r) C(i - r b + n - 1, n - 1).
// Zero for i < 0 or i > n(b-1). Throws DomainError for b < 1 or n < 0.
Integer digit_sum_count(long b, long i, long n);

// Same count, read off from an explicit expansion of (1 + x + ... + x^{b-1})^n.
// Kept as an independent route for cross-checking digit_sum_count.
Integer digit_sum_count_by_powering(long b, long i, long n);

}  // namespace carries
