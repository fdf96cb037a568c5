#include <doctest.h>

#include <random>

#include "carries/combinatorics.hpp"
#include "carries/error.hpp"
#include "carries/matrix.hpp"
#include "carries/polynomial.hpp"
#include "carries/rational.hpp"
#include "oracles.hpp"

using namespace carries;

TEST_CASE("rational canonical form") {
    CHECK(Rational(Integer(2), Integer(4)).to_string() == "1/2");
    CHECK(Rational(Integer(3), Integer(-6)).to_string() == "-1/2");
    CHECK(Rational(Integer(0), Integer(-7)).denominator() == 1);
    CHECK(Rational(Integer(0), Integer(-7)) == Rational(0));
    CHECK(Rational(Integer(10), Integer(5)).to_string() == "2");
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-3/6") == Rational(Integer(-1), Integer(2)));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("+5/1") == Rational(5));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", " 1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), ParseError);
    }
}

TEST_CASE("rational arithmetic round-trips") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = oracle::random_rational(rng);
        const Rational b = oracle::random_rational(rng);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

TEST_CASE("polynomial normal form") {
    const Polynomial zero(std::vector<Rational>{0, 0, 0});
    CHECK(zero.is_zero());
    CHECK(zero.degree() == Polynomial::kZeroDegree);
    CHECK(zero.coefficients().empty());
    CHECK(zero == Polynomial{});

    const Polynomial p{3, 1, 0, 0};
    CHECK(p.degree() == 1);
    CHECK(p.coefficient(5) == Rational(0));
    CHECK(p.coefficient(-1) == Rational(0));
    CHECK(p.evaluate(Rational(1)) == Rational(4));
    CHECK((p - p).is_zero());
    CHECK(p.to_string() == "3 + x");
    CHECK(Polynomial{Rational(Integer(-1), Integer(2)), 0, -1}.to_string() == "-1/2 - x^2");
}

TEST_CASE("polynomial power matches repeated product") {
    const Polynomial p{1, 1, 1};
    Polynomial q{1};
    for (unsigned e = 0; e < 6; ++e) {
        CHECK(pow(p, e) == q);
        q = q * p;
    }
}

TEST_CASE("binomial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(binomial(-2, 1) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(oracle::pascal_binomial(40, 20) == Integer("137846528820"));
    CHECK(binomial(40, 20) == Integer("137846528820"));

    SUBCASE("Pascal's rule") {
        for (long n = 1; n <= 30; ++n)
            for (long k = 0; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("matrix products") {
    const auto m = RatMatrix::from_rows({{1, 2, 3}, {Rational(Integer(1), Integer(3)), 0, -1}, {4, 5, 6}});
    CHECK(mat_mul(RatMatrix::identity(3), m) == m);
    CHECK(mat_mul(m, RatMatrix::identity(3)) == m);

    const Rational half(Integer(1), Integer(2));
    const auto a = RatMatrix::from_rows({{half, half}, {0, 1}});
    CHECK(mat_mul(a, RatMatrix::identity(2)) == a);

    CHECK(mat_pow(m, 0) == RatMatrix::identity(3));
    CHECK(mat_pow(m, 1) == m);
    CHECK(mat_pow(m, 3) == mat_mul(m, mat_mul(m, m)));

    CHECK_THROWS_AS(mat_mul(m, RatMatrix(2, 3)), ShapeError);
    CHECK_THROWS_AS(mat_pow(RatMatrix(2, 3), 2), ShapeError);
    CHECK_THROWS_AS(RatMatrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST_CASE("matrix product properties") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = oracle::random_matrix(rng, 3, 2);
        const auto b = oracle::random_matrix(rng, 2, 4);
        const auto c = oracle::random_matrix(rng, 4, 3);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
        CHECK(mat_mul(a, b).transpose() == mat_mul(b.transpose(), a.transpose()));
    }
    const auto s = oracle::random_matrix(rng, 3, 3);
    for (unsigned long r = 0; r <= 8; ++r)
        for (unsigned long q = 0; q <= 8; ++q) CHECK(mat_pow(s, r + q) == mat_mul(mat_pow(s, r), mat_pow(s, q)));
}
