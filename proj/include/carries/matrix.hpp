#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "carries/rational.hpp"

namespace carries {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Throws ShapeError if rows are ragged.
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }
    const std::vector<Rational>& entries() const { return entries_; }

    RatMatrix transpose() const;
    RatMatrix scaled(const Rational& c) const;

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// Exact product a*b. Throws ShapeError when a.cols() != b.rows().
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

/// a^r by binary exponentiation; a^0 is the identity. Throws ShapeError for non-square a.
RatMatrix mat_pow(const RatMatrix& a, unsigned long r);

/// Row vector times matrix, v*a.
std::vector<Rational> left_multiply(std::span<const Rational> v, const RatMatrix& a);

/// Matrix times column vector, a*v.
std::vector<Rational> right_multiply(const RatMatrix& a, std::span<const Rational> v);

}  // namespace carries
