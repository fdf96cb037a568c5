#include "carries/phib.hpp"

#include <string>
#include <utility>

#include "carries/carries_matrix.hpp"
#include "carries/combinatorics.hpp"
#include "carries/error.hpp"
#include "carries/series.hpp"

namespace carries {

ClassAFunction::ClassAFunction(Polynomial numerator, int pole_order)
    : numerator_(std::move(numerator)), pole_order_(pole_order) {
    if (pole_order_ < 0) throw DomainError("pole order must be nonnegative");
    if (numerator_.is_zero()) return;
    if (pole_order_ < 2) {
        throw DomainError("pole order must be >= 2 for a nonzero numerator, got " +
                          std::to_string(pole_order_));
    }
    if (numerator_.degree() > pole_order_ - 2) {
        throw DomainError("numerator degree " + std::to_string(numerator_.degree()) +
                          " exceeds pole order - 2 = " + std::to_string(pole_order_ - 2));
    }
}

SeriesPrefix taylor_prefix(const ClassAFunction& f, std::size_t length) {
    SeriesPrefix s;
    s.coefficients.reserve(length);
    for (std::size_t k = 0; k < length; ++k) {
        s.coefficients.push_back(f.numerator().is_zero()
                                     ? Rational(0)
                                     : series_coefficient(f.numerator(), f.pole_order(),
                                                          static_cast<long>(k)));
    }
    return s;
}

namespace {

void check_base(long b, long minimum) {
    if (b < minimum) {
        throw DomainError("base must be >= " + std::to_string(minimum) + ", got " + std::to_string(b));
    }
}

}  // namespace

ClassAFunction phi_b_oracle(const ClassAFunction& f, long b) {
    check_base(b, 1);
    if (f.numerator().is_zero()) return f;
    const int n = f.pole_order();
    std::vector<Rational> extracted;
    extracted.reserve(static_cast<std::size_t>(2 * n + 1));
    for (long k = 0; k <= 2L * n; ++k) {
        extracted.push_back(series_coefficient(f.numerator(), n, b * k + b - 1));
    }
    auto recovered = numerator_from_series(extracted, n);
    for (std::size_t i = static_cast<std::size_t>(n - 1); i < recovered.size(); ++i) {
        if (!recovered[i].is_zero()) {
            throw ConsistencyError("Phi_b output has nonzero coefficient at x^" + std::to_string(i) +
                                   " beyond degree n-2 = " + std::to_string(n - 2));
        }
    }
    recovered.resize(static_cast<std::size_t>(n - 1));
    return {Polynomial(std::move(recovered)), n};
}

ClassAFunction phi_b_matrix(const ClassAFunction& f, long b) {
    check_base(b, 1);
    if (f.numerator().is_zero()) return f;
    const int n = f.pole_order();
    const auto chain = carries_matrix_holte(b, n - 1);
    const auto& k = chain.matrix;
    const Rational scale(ipow(Integer(b), static_cast<unsigned long>(n - 1)));
    std::vector<Rational> out(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
        Rational acc;
        for (std::size_t j = 0; j < out.size(); ++j) {
            acc += k(j, i) * f.numerator().coefficient(static_cast<long>(j));
        }
        out[i] = scale * acc;
    }
    return {Polynomial(std::move(out)), n};
}

ClassAFunction phi_b_iterate(const ClassAFunction& f, long b, unsigned long r) {
    check_base(b, 2);
    ClassAFunction cur = f;
    for (unsigned long step = 0; step < r; ++step) cur = phi_b_matrix(cur, b);
    return cur;
}

ClassAFunction phi_b_limit(const ClassAFunction& f) {
    const int n = f.pole_order();
    const Rational mass = f.numerator().evaluate(Rational(1));
    if (mass.is_zero()) return {Polynomial{}, n};
    const Rational scale = mass / Rational(factorial(n - 1));
    return {eulerian_polynomial(n - 1) * scale, n};
}

std::vector<Rational> convergence_trace(const ClassAFunction& f, long b, unsigned long r_max) {
    check_base(b, 2);
    if (r_max < 1) throw DomainError("convergence trace needs at least one iteration");
    if (f.numerator().evaluate(Rational(1)).is_zero()) {
        throw DomainError("convergence trace requires h(1) != 0 (the normalized limit is zero)");
    }
    const int n = f.pole_order();
    const Polynomial limit = phi_b_limit(f).numerator();
    const Integer step_scale = ipow(Integer(b), static_cast<unsigned long>(n - 1));
    Integer scale = 1;
    ClassAFunction cur = f;
    std::vector<Rational> distances;
    distances.reserve(r_max);
    for (unsigned long r = 1; r <= r_max; ++r) {
        cur = phi_b_matrix(cur, b);
        scale *= step_scale;
        const Polynomial normalized = cur.numerator() * Rational(Integer(1), scale);
        distances.push_back((normalized - limit).max_norm());
    }
    return distances;
}

}  // namespace carries
