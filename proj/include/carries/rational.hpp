#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace carries {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Zero is stored as 0/1, so two Rationals are equal iff their numerators and
/// denominators are equal.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(implicit)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)
    Rational(const Integer& num, const Integer& den);

    /// Parses "p/q" or "p" (optional leading '-'); the result is canonicalized.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.value_ = -value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& x);

/// b^e for e >= 0.
Integer ipow(const Integer& base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace carries
