#include "carries/carries_matrix.hpp"

#include <string>

#include "carries/combinatorics.hpp"
#include "carries/error.hpp"

namespace carries {

namespace {

void check_domain(long base, int addends) {
    if (base < 1) throw DomainError("carries base must be >= 1, got " + std::to_string(base));
    if (addends < 1) {
        throw DomainError("carries chain needs at least one addend, got " + std::to_string(addends));
    }
}

}  // namespace

CarriesMatrix carries_matrix_holte(long base, int addends) {
    check_domain(base, addends);
    const long m = addends;
    const Rational scale(Integer(1), ipow(Integer(base), static_cast<unsigned long>(m)));
    RatMatrix k(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        for (long j = 0; j < m; ++j) {
            const long upper = j - i / base;
            Integer sum = 0;
            for (long r = 0; r <= upper; ++r) {
                const Integer term = binomial(m + 1, r) * binomial(m - 1 - i + (j + 1 - r) * base, m);
                if (r % 2 == 0) sum += term;
                else sum -= term;
            }
            k(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(sum) * scale;
        }
    }
    return {base, addends, std::move(k)};
}

CarriesMatrix carries_matrix_from_counts(long base, int addends) {
    check_domain(base, addends);
    const long m = addends;
    const Integer denom = ipow(Integer(base), static_cast<unsigned long>(m));
    RatMatrix k(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (long from = 0; from < m; ++from) {
        for (long to = 0; to < m; ++to) {
            const Integer count = digit_sum_count(base, to * base - from + base - 1, m + 1);
            k(static_cast<std::size_t>(from), static_cast<std::size_t>(to)) = Rational(count, denom);
        }
    }
    return {base, addends, std::move(k)};
}

std::vector<Rational> carries_stationary(int addends) {
    if (addends < 1) {
        throw DomainError("stationary law needs at least one addend, got " + std::to_string(addends));
    }
    const auto table = eulerian_numbers(addends);
    const Integer total = factorial(addends);
    std::vector<Rational> pi;
    pi.reserve(table.values.size());
    for (const auto& a : table.values) pi.emplace_back(a, total);
    return pi;
}

CarriesMatrix r_step_transition(const CarriesMatrix& k, unsigned long r) {
    long base = 1;
    for (unsigned long s = 0; s < r && k.base != 1; ++s) {
        if (__builtin_mul_overflow(base, k.base, &base)) {
            throw DomainError("base " + std::to_string(k.base) + "^" + std::to_string(r) +
                              " overflows");
        }
    }
    return {base, k.addends, mat_pow(k.matrix, r)};
}

}  // namespace carries
