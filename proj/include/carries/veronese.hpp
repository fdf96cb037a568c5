#pragma once

#include <cstddef>
#include <optional>

#include "carries/matrix.hpp"
#include "carries/polynomial.hpp"

namespace carries {

/// Hilbert-series style function h(x) / (1-x)^{n+1} with deg h <= n + 1.
class HilbertFunction {
public:
    /// Throws DomainError for n < 0 or deg h > n + 1.
    HilbertFunction(Polynomial numerator, int n);

    const Polynomial& numerator() const { return numerator_; }
    int n() const { return n_; }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

private:
    Polynomial numerator_;
    int n_;
};

/// Keeps every b-th series coefficient: sum_k a_{bk} x^k = h^<b>(x) / (1-x)^{n+1}.
/// Throws ConsistencyError if the recovered numerator exceeds degree n + 1.
HilbertFunction veronese_transform(const HilbertFunction& f, long b);

/// (n+2)x(n+2) matrix M_b with h^<b>_i = sum_j M_b(i, j) h_j.
struct VeroneseMatrix {
    long base = 1;
    int n = 0;
    RatMatrix matrix;
};

/// Column j is the transform of the basis numerator x^j.
VeroneseMatrix veronese_matrix(int n, long b);

struct SubmatrixMismatch {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational expected;  // carries matrix entry
    Rational actual;    // transformed Veronese interior entry
};

struct SubmatrixCheck {
    bool equal = false;
    std::optional<SubmatrixMismatch> mismatch;
};

// Deletes the first and last rows and columns of M_b, scales by b^{-n},
// transposes, and compares with the carries matrix for n addends.
// Throws DomainError for n < 1 or b < 2.
SubmatrixCheck carries_submatrix_check(int n, long b);

}  // namespace carries
