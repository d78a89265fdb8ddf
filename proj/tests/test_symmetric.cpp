#include "doctest.h"

#include <stdexcept>

#include "chern/chernpoly.hpp"
#include "chern/multipoly.hpp"
#include "chern/rational.hpp"
#include "chern/symmetric.hpp"

using namespace chern;

TEST_SUITE("symmetric") {
    TEST_CASE("dimension guard") {
        CHECK_NOTHROW(check_dimension(1));
        CHECK_NOTHROW(check_dimension(kDimensionCeiling));
        CHECK_THROWS_AS(check_dimension(0), SchemaError);
        CHECK_THROWS_AS(check_dimension(kDimensionCeiling + 1), SchemaError);
        CHECK_THROWS_AS(check_dimension(-3), SchemaError);
    }

    TEST_CASE("elementary symmetric polynomials") {
        const MultiPoly e1 = elementary_in_roots(3, 1);
        CHECK(e1 == MultiPoly::root(3, 3, 0) + MultiPoly::root(3, 3, 1) +
                        MultiPoly::root(3, 3, 2));
        const MultiPoly e2 = elementary_in_roots(3, 2);
        CHECK(e2.coeff({1, 1, 0, 0}) == Rational(1));
        CHECK(e2.coeff({1, 0, 1, 0}) == Rational(1));
        CHECK(e2.coeff({0, 1, 1, 0}) == Rational(1));
        CHECK(e2.coeff({2, 0, 0, 0}) == Rational(0));
        const MultiPoly e3 = elementary_in_roots(3, 3);
        CHECK(e3.coeff({1, 1, 1, 0}) == Rational(1));
        CHECK(elementary_in_roots(3, 0).coeff({0, 0, 0, 0}) == Rational(1));
        CHECK_THROWS_AS(elementary_in_roots(3, 4), std::domain_error);
        CHECK(is_symmetric(e2));
    }

    TEST_CASE("symmetry detector") {
        const MultiPoly x = MultiPoly::root(3, 3, 0);
        const MultiPoly y = MultiPoly::root(3, 3, 1);
        const MultiPoly z = MultiPoly::root(3, 3, 2);
        CHECK(is_symmetric(x + y + z));
        CHECK(is_symmetric(x * y + y * z + x * z));
        CHECK_FALSE(is_symmetric(x + y));
        CHECK_FALSE(is_symmetric(x * x * y));
    }

    TEST_CASE("reduction to the c-basis") {
        for (int k = 1; k <= 4; ++k)
            CHECK(reduce_to_elementary(elementary_in_roots(4, k)) == ChernPoly::ck(k));
        // (x+y)(y+z)(z+x) = e1 e2 - e3 in three roots.
        const MultiPoly x = MultiPoly::root(3, 3, 0);
        const MultiPoly y = MultiPoly::root(3, 3, 1);
        const MultiPoly z = MultiPoly::root(3, 3, 2);
        const ChernPoly got = reduce_to_elementary((x + y) * (y + z) * (z + x));
        CHECK(got == ChernPoly::ck(1) * ChernPoly::ck(2) - ChernPoly::ck(3));
        CHECK_THROWS_AS(reduce_to_elementary(x - y), std::domain_error);
    }

    TEST_CASE("reduce inverts expand up to the truncation weight") {
        const ChernPoly q = Rational(3, Integer(7)) * ChernPoly::ck(1) * ChernPoly::ck(2) +
                            ChernPoly::ck(3) - Rational(5) * ChernPoly::ck(1);
        for (int n = 3; n <= 5; ++n) {
            const MultiPoly image = expand_in_chern_roots(q, n);
            CHECK(reduce_to_elementary(image) == q);
        }
    }

    TEST_CASE("Newton power sums") {
        const ChernPoly c1 = ChernPoly::ck(1);
        const ChernPoly c2 = ChernPoly::ck(2);
        const ChernPoly c3 = ChernPoly::ck(3);
        CHECK(newton_power_sum(4, 1) == c1);
        CHECK(newton_power_sum(4, 2) == c1 * c1 - Rational(2) * c2);
        CHECK(newton_power_sum(4, 3) ==
              c1.pow(3) - Rational(3) * c1 * c2 + Rational(3) * c3);
        // Independent oracle: reduce the literal sum of k-th powers.
        for (int n = 2; n <= 5; ++n) {
            for (int k = 1; k <= n; ++k) {
                MultiPoly s(n, n);
                for (int i = 0; i < n; ++i) {
                    MultiPoly xk = MultiPoly::constant(n, n, Rational(1));
                    for (int j = 0; j < k; ++j) xk = xk * MultiPoly::root(n, n, i);
                    s += xk;
                }
                CHECK(newton_power_sum(n, k) == reduce_to_elementary(s));
            }
        }
    }

    TEST_CASE("substitution") {
        const ChernPoly p = ChernPoly::ck(1) * ChernPoly::ck(3) +
                            Rational(2) * ChernPoly::ck(4) + ChernPoly::ck(1).pow(2);
        const ChernPoly killed = substitute(p, {{1, ChernPoly()}});
        CHECK(killed == Rational(2) * ChernPoly::ck(4));
        const ChernPoly renamed = substitute(p, {{3, ChernPoly::ck(2) * ChernPoly::ck(1)}});
        CHECK(renamed == ChernPoly::ck(1).pow(2) * ChernPoly::ck(2) +
                             Rational(2) * ChernPoly::ck(4) + ChernPoly::ck(1).pow(2));
        CHECK(substitute(p, {}) == p);
    }

    TEST_CASE("rendering conventions") {
        const ChernPoly K = Rational(1, Integer(12)) * ChernPoly::ck(1) * ChernPoly::ck(5) +
                            Rational(13, Integer(4)) * ChernPoly::ck(6);
        CHECK(K.str() == "(1/12)*c1*c5 + (13/4)*c6");
        CHECK(ChernPoly::ck(4).str() == "c4");
        CHECK(ChernPoly().str() == "0");
        const ChernPoly m = ChernPoly::ck(2) - Rational(3) * ChernPoly::ck(1).pow(2);
        CHECK(m.str() == "-3*c1^2 + c2");
    }

    TEST_CASE("monomial keys round-trip and reject malformed input") {
        CHECK(ChernPoly::monomial_key({2, 0, 1}) == "c1^2*c3");
        CHECK(ChernPoly::parse_monomial_key("c1^2*c3") == std::vector<int>{2, 0, 1});
        CHECK(ChernPoly::monomial_key({}) == "1");
        CHECK(ChernPoly::parse_monomial_key("1") == std::vector<int>{});
        CHECK_THROWS_AS(ChernPoly::parse_monomial_key("c5c1"), SchemaError);
        CHECK_THROWS_AS(ChernPoly::parse_monomial_key("c3*c1"), SchemaError);
        CHECK_THROWS_AS(ChernPoly::parse_monomial_key("c1^1"), SchemaError);
    }
}
