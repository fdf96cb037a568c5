#include "carries/combinatorics.hpp"

#include <string>

#include "carries/error.hpp"

namespace carries {

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative number");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

EulerianTable eulerian_numbers(int n) {
    if (n < 1) throw DomainError("Eulerian numbers need n >= 1, got " + std::to_string(n));
    std::vector<Integer> row{1};
    for (int size = 2; size <= n; ++size) {
        std::vector<Integer> next(static_cast<std::size_t>(size));
        for (int k = 0; k < size; ++k) {
            Integer v = 0;
            if (k < size - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
            if (k > 0) v += (size - k) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
    }
    return {n, std::move(row)};
}

Polynomial eulerian_polynomial(int n) {
    const auto table = eulerian_numbers(n);
    std::vector<Rational> coeffs(table.values.begin(), table.values.end());
    return Polynomial(std::move(coeffs));
}

namespace {

void check_digit_domain(long b, long n) {
    if (b < 1) throw DomainError("digit base must be >= 1, got " + std::to_string(b));
    if (n < 0) throw DomainError("digit count must be >= 0, got " + std::to_string(n));
}

}  // namespace

Integer digit_sum_count(long b, long i, long n) {
    check_digit_domain(b, n);
    if (i < 0 || i > n * (b - 1)) return 0;
    if (n == 0) return i == 0 ? 1 : 0;
    Integer total = 0;
    for (long r = 0; r <= n && r * b <= i; ++r) {
        const Integer term = binomial(n, r) * binomial(i - r * b + n - 1, n - 1);
        if (r % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

Integer digit_sum_count_by_powering(long b, long i, long n) {
    check_digit_domain(b, n);
    const Polynomial digits(std::vector<Rational>(static_cast<std::size_t>(b), Rational(1)));
    const Rational c = pow(digits, static_cast<unsigned>(n)).coefficient(i);
    return c.numerator();
}

}  // namespace carries
