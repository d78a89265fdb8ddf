#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "chern/multipoly.hpp"
#include "chern/rational.hpp"

using namespace chern;

TEST_SUITE("multipoly") {
    TEST_CASE("constants, roots, and coefficient lookup") {
        const MultiPoly c = MultiPoly::constant(3, 4, Rational(5));
        CHECK(c.coeff({0, 0, 0, 0}) == Rational(5));
        CHECK(MultiPoly::constant(3, 4, Rational(0)).is_zero());
        const MultiPoly x2 = MultiPoly::root(3, 4, 1);
        CHECK(x2.coeff({0, 1, 0, 0}) == Rational(1));
        CHECK(x2.coeff({1, 0, 0, 0}) == Rational(0));
        const MultiPoly t = MultiPoly::t_var(3, 4);
        CHECK(t.coeff({0, 0, 0, 1}) == Rational(1));
    }

    TEST_CASE("ring arithmetic and cancellation") {
        const MultiPoly x = MultiPoly::root(2, 3, 0);
        const MultiPoly y = MultiPoly::root(2, 3, 1);
        const MultiPoly lhs = (x + y) * (x - y);
        const MultiPoly rhs = x * x - y * y;
        CHECK(lhs == rhs);
        CHECK((x - x).is_zero());
        CHECK((x * y) == (y * x));
        const MultiPoly sq = (x + y) * (x + y);
        CHECK(sq.coeff({1, 1, 0}) == Rational(2));
        CHECK(sq.coeff({2, 0, 0}) == Rational(1));
    }

    TEST_CASE("root-degree truncation contract") {
        const MultiPoly x = MultiPoly::root(1, 2, 0);
        const MultiPoly cube = x * x * x;  // degree 3 > bound 2: dropped
        CHECK(cube.is_zero());
        CHECK((x * x).coeff({2, 0}) == Rational(1));
        MultiPoly p(1, 2);
        p.add_term({3, 0}, Rational(7));
        CHECK(p.is_zero());
        p.add_term({2, 0}, Rational(7));
        CHECK(p.coeff({2, 0}) == Rational(7));
    }

    TEST_CASE("t-degree cap at the arity") {
        const MultiPoly t = MultiPoly::t_var(2, 4);
        const MultiPoly t3 = t * t * t;  // t-degree 3 > arity 2: dropped
        CHECK(t3.is_zero());
        CHECK((t * t).coeff({0, 0, 2}) == Rational(1));
    }

    TEST_CASE("t_coefficient resets the t slot") {
        const MultiPoly x = MultiPoly::root(2, 3, 0);
        const MultiPoly t = MultiPoly::t_var(2, 3);
        const MultiPoly p = x * t * t + MultiPoly::constant(2, 3, Rational(4)) * t;
        const MultiPoly c2 = p.t_coefficient(2);
        CHECK(c2 == x);
        const MultiPoly c1 = p.t_coefficient(1);
        CHECK(c1.coeff({0, 0, 0}) == Rational(4));
        CHECK(p.t_coefficient(0).is_zero());
    }

    TEST_CASE("homogeneous slices") {
        const MultiPoly x = MultiPoly::root(2, 4, 0);
        const MultiPoly y = MultiPoly::root(2, 4, 1);
        const MultiPoly p = (MultiPoly::constant(2, 4, Rational(1)) + x) * (x + y * y);
        CHECK(p.homogeneous_part(1) == x);
        CHECK(p.homogeneous_part(2) == x * x + y * y);
        CHECK(p.max_root_degree() == 3);
        CHECK(p.degree_range(2, 3) == p - p.homogeneous_part(1));
    }

    TEST_CASE("root swap witnesses symmetry and asymmetry") {
        const MultiPoly x = MultiPoly::root(2, 3, 0);
        const MultiPoly y = MultiPoly::root(2, 3, 1);
        const MultiPoly sym = x * y + x + y;
        CHECK(sym.swapped(0, 1) == sym);
        const MultiPoly asym = x * x + y;
        CHECK(asym.swapped(0, 1) != asym);
        CHECK(asym.swapped(0, 1).swapped(0, 1) == asym);
    }

    TEST_CASE("arity mismatch is rejected") {
        const MultiPoly a = MultiPoly::constant(2, 3, Rational(1));
        const MultiPoly b = MultiPoly::constant(3, 3, Rational(1));
        CHECK_THROWS_AS(a + b, std::domain_error);
    }
}
