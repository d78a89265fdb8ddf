#include "doctest.h"

#include <stdexcept>

#include "chern/charclass.hpp"
#include "chern/chern_numbers.hpp"
#include "chern/chernpoly.hpp"
#include "chern/multipoly.hpp"
#include "chern/rational.hpp"
#include "chern/symmetric.hpp"
#include "chern/unipoly.hpp"

using namespace chern;

TEST_SUITE("charclass") {
    TEST_CASE("Todd series coefficients") {
        const UniPoly T = todd_series(6);
        CHECK(T.coeff(0) == Rational(1));
        CHECK(T.coeff(1) == Rational(1, Integer(2)));
        CHECK(T.coeff(2) == Rational(1, Integer(12)));
        CHECK(T.coeff(3) == Rational(0));
        CHECK(T.coeff(4) == Rational(-1, Integer(720)));
        CHECK(T.coeff(5) == Rational(0));
        CHECK(T.coeff(6) == Rational(1, Integer(30240)));
        // Reciprocal really inverts it at every truncation order.
        for (int ord = 1; ord <= 8; ++ord) {
            const UniPoly prod = todd_series(ord) * todd_reciprocal(ord);
            CHECK(prod.truncated(ord) == UniPoly(Rational(1)));
        }
    }

    TEST_CASE("Chern character low weights") {
        const ChernPoly ch = chern_character(3);
        const ChernPoly c1 = ChernPoly::ck(1);
        const ChernPoly c2 = ChernPoly::ck(2);
        const ChernPoly c3 = ChernPoly::ck(3);
        CHECK(ch.weight_part(0) == ChernPoly::constant(Rational(3)));
        CHECK(ch.weight_part(1) == c1);
        CHECK(ch.weight_part(2) == Rational(1, Integer(2)) * (c1 * c1 - Rational(2) * c2));
        CHECK(ch.weight_part(3) ==
              Rational(1, Integer(6)) *
                  (c1.pow(3) - Rational(3) * c1 * c2 + Rational(3) * c3));
    }

    TEST_CASE("Todd class low weights") {
        const ChernPoly td = todd_class(4);
        const ChernPoly c1 = ChernPoly::ck(1);
        const ChernPoly c2 = ChernPoly::ck(2);
        const ChernPoly c3 = ChernPoly::ck(3);
        const ChernPoly c4 = ChernPoly::ck(4);
        CHECK(td.weight_part(0) == ChernPoly::constant(Rational(1)));
        CHECK(td.weight_part(1) == Rational(1, Integer(2)) * c1);
        CHECK(td.weight_part(2) == Rational(1, Integer(12)) * (c1 * c1 + c2));
        CHECK(td.weight_part(3) == Rational(1, Integer(24)) * c1 * c2);
        CHECK(td.weight_part(4) ==
              Rational(-1, Integer(720)) *
                  (c1.pow(4) - Rational(4) * c1 * c1 * c2 - Rational(3) * c2 * c2 -
                   c1 * c3 + c4));
    }

    TEST_CASE("lambda character sums to the exterior algebra rank at weight zero") {
        for (int n = 2; n <= 4; ++n) {
            for (int p = 0; p <= n; ++p) {
                const ChernPoly lam = lambda_chern_character(n, p);
                CHECK(lam.weight_part(0) ==
                      ChernPoly::constant(Rational(binomial(n, p))));
            }
        }
        // Lambda^0 is trivial: character identically 1.
        CHECK(lambda_chern_character(3, 0) == ChernPoly::constant(Rational(1)));
    }

    TEST_CASE("product expansion in one root") {
        // x + t + (1/2) t x; weight-1 part of the t coefficient is x/2.
        const MultiPoly p = kclass_product(1);
        CHECK(p.coeff({1, 0}) == Rational(1));
        CHECK(p.coeff({0, 1}) == Rational(1));
        CHECK(p.coeff({1, 1}) == Rational(1, Integer(2)));
        CHECK(p.terms().size() == 3);
    }

    TEST_CASE("table boundary entries") {
        for (int n = 1; n <= 6; ++n) {
            CHECK(kclass(n, 0) == ChernPoly::ck(n));
            CHECK(kclass(n, 1) == Rational(n, Integer(2)) * ChernPoly::ck(n));
        }
        CHECK_THROWS_AS(kclass(2, 3), std::domain_error);
        CHECK_THROWS_AS(kclass(0, 0), SchemaError);
    }

    TEST_CASE("golden expansions") {
        CHECK(kclass(4, 0).str() == "c4");
        CHECK(kclass(2, 2).str() == "(1/12)*c1^2 + (1/12)*c2");
        CHECK(kclass(6, 2).str() == "(1/12)*c1*c5 + (13/4)*c6");
        CHECK(kclass(4, 2).str() == "(1/12)*c1*c3 + (7/6)*c4");
        CHECK(kclass(6, 2) == kclass2_closed_form(6));
        CHECK(kclass(6, 4) == kclass4_closed_form(6));
        CHECK(kclass(6, 6) == kclass6_closed_form(6));
    }

    TEST_CASE("closed forms against the product, small dimensions") {
        for (int n = 2; n <= 6; ++n) {
            CHECK(kclass(n, 2) == kclass2_closed_form(n));
            if (n >= 4) CHECK(kclass(n, 4) == kclass4_closed_form(n));
            if (n >= 6) CHECK(kclass(n, 6) == kclass6_closed_form(n));
            CHECK(verify_kclass_lemmas(n).ok());
        }
    }

    TEST_CASE("full t^2 coefficient closed form") {
        for (int n = 2; n <= 5; ++n) {
            const MultiPoly c2part = kclass_product(n).t_coefficient(2);
            const ChernPoly twice =
                Rational(2) * reduce_to_elementary(c2part.degree_range(n - 2, n));
            CHECK(twice == t2_coefficient_closed_form(n));
        }
    }

    TEST_CASE("ideal membership thresholds") {
        for (int n = 2; n <= 6; ++n)
            for (int k = 1; k <= n; ++k) CHECK(verify_ideal_membership(n, k));
    }

    TEST_CASE("derivative identities") {
        for (int n = 2; n <= 6; ++n) CHECK(second_derivative_identity(n).ok());
        for (int n = 4; n <= 6; ++n) CHECK(fourth_derivative_identity(n).ok());
    }

    TEST_CASE("odd orders lie in the even span") {
        // K(n,1) = (n/2) K(n,0) always.
        const auto a = odd_order_combination(4, 0);
        REQUIRE(a.size() == 1);
        CHECK(a[0] == Rational(2));
        // K(5,3) as a combination of K(5,0), K(5,2).
        const auto b = odd_order_combination(5, 1);
        REQUIRE(b.size() == 2);
        ChernPoly combo;
        for (std::size_t j = 0; j < b.size(); ++j)
            combo += b[j] * kclass(5, 2 * static_cast<int>(j));
        CHECK(combo == kclass(5, 3));
    }

    TEST_CASE("pairing against Chern-number data") {
        ChernNumbers quartic;
        quartic.n = 2;
        quartic.c1_zero = true;
        quartic.pairings["c1^2"] = Integer(0);
        quartic.pairings["c2"] = Integer(24);
        CHECK(pair(ChernPoly::ck(2), quartic) == Rational(24));
        CHECK(pair(kclass(2, 2), quartic) == Rational(2));  // (c1^2 + c2)/12
        CHECK_THROWS_AS(pair(ChernPoly::ck(1), quartic), std::domain_error);
    }
}
