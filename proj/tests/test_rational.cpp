#include "doctest.h"

#include <stdexcept>

#include "chern/rational.hpp"

using namespace chern;

TEST_SUITE("rational") {
    TEST_CASE("construction and canonical form") {
        CHECK(Rational(6, Integer(4)).str() == "3/2");
        CHECK(Rational(-6, Integer(4)).str() == "-3/2");
        CHECK(Rational(6, Integer(-4)).str() == "-3/2");
        CHECK(Rational(0, Integer(7)).str() == "0");
        CHECK(Rational(5).str() == "5");
        CHECK(Rational(Integer(12), Integer(30)).str() == "2/5");
    }

    TEST_CASE("zero denominator throws before canonicalization") {
        CHECK_THROWS_AS(Rational(1, Integer(0)), std::domain_error);
        CHECK_THROWS_AS(Rational(0, Integer(0)), std::domain_error);
    }

    TEST_CASE("field arithmetic") {
        const Rational a(1, Integer(2));
        const Rational b(1, Integer(3));
        CHECK((a + b).str() == "5/6");
        CHECK((a - b).str() == "1/6");
        CHECK((a * b).str() == "1/6");
        CHECK((a / b).str() == "3/2");
        CHECK((-a).str() == "-1/2");
        CHECK(a + b == b + a);
        CHECK((a + b) * (a - b) == a * a - b * b);
    }

    TEST_CASE("powers, including negative exponents") {
        const Rational h(1, Integer(2));
        CHECK(h.pow(0) == Rational(1));
        CHECK(h.pow(3).str() == "1/8");
        CHECK(h.pow(-2) == Rational(4));
        CHECK(Rational(-2).pow(3) == Rational(-8));
        CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
    }

    TEST_CASE("integer extraction") {
        CHECK(Rational(8, Integer(4)).to_integer() == 2);
        CHECK(Rational(-9, Integer(3)).to_integer() == -3);
        CHECK_THROWS_AS(Rational(1, Integer(2)).to_integer(), std::domain_error);
    }

    TEST_CASE("binomial coefficients") {
        CHECK(binomial(5, 2) == 10);
        CHECK(binomial(0, 0) == 1);
        CHECK(binomial(4, 5) == 0);
        CHECK(binomial(4, -1) == 0);
        CHECK(binomial(52, 5) == Integer(2598960));
        // Pascal recurrence on a band of larger values.
        for (long long n = 1; n <= 40; ++n)
            for (long long k = 1; k <= n; ++k)
                CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    TEST_CASE("factorials") {
        CHECK(factorial(0) == 1);
        CHECK(factorial(5) == 120);
        CHECK(factorial(20) == Integer("2432902008176640000"));
        CHECK_THROWS_AS(factorial(-1), std::domain_error);
    }
}
