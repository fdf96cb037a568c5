#pragma once

#include <vector>

#include "carries/matrix.hpp"
#include "carries/rational.hpp"

namespace carries {

/// Transition matrix of the carries chain for adding `addends` random base-`base`
/// numbers. Rows index the current carry, columns the next one:
/// matrix(i, j) = P(next carry = j | current carry = i), carries in 0..addends-1.
struct CarriesMatrix {
    long base = 1;
    int addends = 1;
    RatMatrix matrix;

    friend bool operator==(const CarriesMatrix&, const CarriesMatrix&) = default;
};

/// Holte's closed form
///   K_b(i,j) = b^{-m} sum_{r=0}^{j - floor(i/b)} (-1)^r C(m+1, r) C(m-1-i+(j+1-r)b, m)
/// with m = addends. An empty sum gives a structural zero.
/// Throws DomainError for base < 1 or addends < 1.
CarriesMatrix carries_matrix_holte(long base, int addends);

/// Builds the same matrix from digit-sum counts:
///   K_b(j, i) = C_b(i b - j + b - 1, m + 1) / b^m.
CarriesMatrix carries_matrix_from_counts(long base, int addends);

/// Stationary law A(m, j)/m!, which does not depend on the base.
std::vector<Rational> carries_stationary(int addends);

/// r steps of the chain: the base-b^r matrix, computed as K_b^r.
/// Throws DomainError if b^r does not fit in a long.
CarriesMatrix r_step_transition(const CarriesMatrix& k, unsigned long r);

}  // namespace carries
