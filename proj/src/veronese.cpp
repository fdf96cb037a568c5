#include "carries/veronese.hpp"

#include <string>
#include <utility>

#include "carries/carries_matrix.hpp"
#include "carries/error.hpp"
#include "carries/series.hpp"

namespace carries {

HilbertFunction::HilbertFunction(Polynomial numerator, int n)
    : numerator_(std::move(numerator)), n_(n) {
    if (n_ < 0) throw DomainError("Hilbert series needs n >= 0, got " + std::to_string(n_));
    if (numerator_.degree() > n_ + 1) {
        throw DomainError("numerator degree " + std::to_string(numerator_.degree()) +
                          " exceeds n + 1 = " + std::to_string(n_ + 1));
    }
}

HilbertFunction veronese_transform(const HilbertFunction& f, long b) {
    if (b < 1) throw DomainError("Veronese base must be >= 1, got " + std::to_string(b));
    const int pole = f.n() + 1;
    const auto length = static_cast<long>(2 * (f.n() + 2));
    std::vector<Rational> decimated;
    decimated.reserve(static_cast<std::size_t>(length));
    for (long k = 0; k < length; ++k) {
        decimated.push_back(series_coefficient(f.numerator(), pole, b * k));
    }
    auto recovered = numerator_from_series(decimated, pole);
    const auto keep = static_cast<std::size_t>(f.n() + 2);
    for (std::size_t i = keep; i < recovered.size(); ++i) {
        if (!recovered[i].is_zero()) {
            throw ConsistencyError("Veronese numerator has nonzero coefficient at x^" +
                                   std::to_string(i) + " beyond degree n+1");
        }
    }
    recovered.resize(keep);
    return {Polynomial(std::move(recovered)), f.n()};
}

VeroneseMatrix veronese_matrix(int n, long b) {
    if (n < 0) throw DomainError("Veronese matrix needs n >= 0, got " + std::to_string(n));
    const auto size = static_cast<std::size_t>(n + 2);
    RatMatrix m(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        const auto image = veronese_transform({Polynomial::monomial(static_cast<int>(j)), n}, b);
        for (std::size_t i = 0; i < size; ++i) m(i, j) = image.numerator().coefficient(static_cast<long>(i));
    }
    return {b, n, std::move(m)};
}

SubmatrixCheck carries_submatrix_check(int n, long b) {
    if (n < 1) throw DomainError("submatrix check needs n >= 1 (the n = 0 interior is empty)");
    if (b < 2) throw DomainError("submatrix check needs base >= 2, got " + std::to_string(b));
    const auto full = veronese_matrix(n, b).matrix;
    const auto size = static_cast<std::size_t>(n);
    const Rational scale(Integer(1), ipow(Integer(b), static_cast<unsigned long>(n)));
    RatMatrix interior(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) interior(i, j) = full(i + 1, j + 1);
    const RatMatrix candidate = interior.scaled(scale).transpose();
    const RatMatrix expected = carries_matrix_holte(b, n).matrix;
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (candidate(i, j) != expected(i, j)) {
                return {false, SubmatrixMismatch{i, j, expected(i, j), candidate(i, j)}};
            }
        }
    }
    return {true, std::nullopt};
}

}  // namespace carries
