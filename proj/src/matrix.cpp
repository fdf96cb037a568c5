#include "carries/matrix.hpp"

#include <string>

#include "carries/error.hpp"

namespace carries {

namespace {

std::string shape(const RatMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
    RatMatrix s = *this;
    for (auto& e : s.entries_) e *= c;
    return s;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("cannot multiply " + shape(a) + " by " + shape(b));
    }
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

RatMatrix mat_pow(const RatMatrix& a, unsigned long r) {
    if (!a.is_square()) throw ShapeError("matrix power of non-square " + shape(a));
    RatMatrix result = RatMatrix::identity(a.rows());
    RatMatrix base = a;
    while (r > 0) {
        if (r & 1UL) result = mat_mul(result, base);
        r >>= 1UL;
        if (r > 0) base = mat_mul(base, base);
    }
    return result;
}

std::vector<Rational> left_multiply(std::span<const Rational> v, const RatMatrix& a) {
    if (v.size() != a.rows()) throw ShapeError("row vector length does not match " + shape(a));
    std::vector<Rational> out(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += v[i] * a(i, j);
    return out;
}

std::vector<Rational> right_multiply(const RatMatrix& a, std::span<const Rational> v) {
    if (v.size() != a.cols()) throw ShapeError("column vector length does not match " + shape(a));
    std::vector<Rational> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

}  // namespace carries
