#pragma once

#include <vector>

#include "carries/polynomial.hpp"
#include "carries/rational.hpp"

namespace carries {

/// h(x) / (1-x)^n with deg h <= n - 2.
///
/// n >= 2 is required unless h is zero; the zero function may carry any
/// nonnegative pole order.
class ClassAFunction {
public:
    /// Throws DomainError if the membership conditions fail.
    ClassAFunction(Polynomial numerator, int pole_order);

    const Polynomial& numerator() const { return numerator_; }
    int pole_order() const { return pole_order_; }

    friend bool operator==(const ClassAFunction&, const ClassAFunction&) = default;

private:
    Polynomial numerator_;
    int pole_order_;
};

/// First `length` Taylor coefficients a_0, ..., a_{length-1} at x = 0.
struct SeriesPrefix {
    std::vector<Rational> coefficients;
    std::size_t length() const { return coefficients.size(); }
};

SeriesPrefix taylor_prefix(const ClassAFunction& f, std::size_t length);

// Phi_b by direct coefficient extraction: takes a'_k = a_{bk+b-1} for
// k = 0..2n, multiplies that prefix back by (1-x)^n and checks that every
// recovered coefficient from index n-1 up to 2n vanishes.
// Throws DomainError for b < 1 and ConsistencyError if the check fails.
ClassAFunction phi_b_oracle(const ClassAFunction& f, long b);

// Phi_b through the carries chain with m = n - 1 addends:
//   h'_i = b^{n-1} sum_j K_b(j, i) h_j.
// K_b is stored with rows = current carry, so this is the transpose of K_b
// acting on the coefficient vector of h.
ClassAFunction phi_b_matrix(const ClassAFunction& f, long b);

/// Phi_b applied r times. Throws DomainError for b < 2.
ClassAFunction phi_b_iterate(const ClassAFunction& f, long b, unsigned long r);

/// lim_r Phi_b^r(f) / b^{r(n-1)} = A_{n-1}(x) h(1) / ((n-1)! (1-x)^n).
ClassAFunction phi_b_limit(const ClassAFunction& f);

/// Max-norm distances d_1..d_{r_max} between the normalized iterate numerators
/// Phi_b^r(f) / b^{r(n-1)} and the limit numerator.
/// Throws DomainError for b < 2, r_max < 1 or h(1) = 0.
std::vector<Rational> convergence_trace(const ClassAFunction& f, long b, unsigned long r_max);

}  // namespace carries
