#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "carries/rational.hpp"

namespace carries {

/// Dense univariate polynomial over Rational, ascending powers.
///
/// The stored coefficient list never ends in zero; the zero polynomial is the
/// empty list and reports degree kZeroDegree.
class Polynomial {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<Rational> coefficients)
        : Polynomial(std::vector<Rational>(coefficients)) {}

    static Polynomial monomial(int power, Rational coefficient = Rational(1));

    int degree() const {
        return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^i; zero outside the stored range (including i < 0).
    Rational coefficient(long i) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    /// Largest absolute coefficient; zero for the zero polynomial.
    Rational max_norm() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, e.g. "3 + x - 1/2*x^2".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// p^e by repeated squaring.
Polynomial pow(const Polynomial& p, unsigned exponent);

}  // namespace carries
