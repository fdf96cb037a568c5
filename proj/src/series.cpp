#include "carries/series.hpp"

#include <algorithm>

#include "carries/combinatorics.hpp"
#include "carries/error.hpp"

namespace carries {

Rational series_coefficient(const Polynomial& h, int pole_order, long k) {
    if (pole_order < 1) throw DomainError("series expansion needs pole order >= 1");
    Rational a;
    const auto& coeffs = h.coefficients();
    for (long j = 0; j < static_cast<long>(coeffs.size()) && j <= k; ++j) {
        if (coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
        a += coeffs[static_cast<std::size_t>(j)] * Rational(binomial(k - j + pole_order - 1, pole_order - 1));
    }
    return a;
}

std::vector<Rational> numerator_from_series(std::span<const Rational> prefix, int pole_order) {
    std::vector<Rational> out(prefix.size());
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        const long top = std::min<long>(static_cast<long>(i), pole_order);
        for (long t = 0; t <= top; ++t) {
            const Rational term = Rational(binomial(pole_order, t)) * prefix[i - static_cast<std::size_t>(t)];
            if (t % 2 == 0) out[i] += term;
            else out[i] -= term;
        }
    }
    return out;
}

}  // namespace carries
