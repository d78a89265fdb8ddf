#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "chern/invariants.hpp"
#include "chern/moduli.hpp"
#include "chern/rational.hpp"
#include "chern/unipoly.hpp"

using namespace chern;

TEST_SUITE("moduli") {
    TEST_CASE("genus guard") {
        CHECK_THROWS_AS(mg_poincare(1), std::domain_error);
        CHECK_THROWS_AS(mg_chi(0), std::domain_error);
    }

    TEST_CASE("genus two by hand") {
        const PoincarePoly P = mg_poincare(2);
        const std::vector<Integer> want = {1, 0, 1, 4, 1, 0, 1};
        CHECK(P.betti == want);
        CHECK(P.d == 6);
        CHECK(P.duality);
        const ChiPoly chi = mg_chi(2);
        CHECK(chi.n == 3);
        CHECK(chi.at(0) == 1);
        CHECK(chi.at(1) == 1);
        CHECK(chi.at(2) == -1);
        CHECK(chi.at(3) == -1);
    }

    TEST_CASE("stated Betti facts for all small genera") {
        for (int g = 2; g <= 8; ++g) {
            const PoincarePoly P = mg_poincare(g);
            CHECK(P.d == 6 * g - 6);
            CHECK(P.b(0) == 1);
            CHECK(P.b(1) == 0);
            CHECK(P.b(2) == 1);
            CHECK(P.b(3) == Integer(2 * g));
            CHECK(P.value_at(Rational(1)) ==
                  Rational(Integer(g) * (Integer(1) << (2 * g - 2))));
            CHECK(P.euler() == 0);
        }
    }

    TEST_CASE("chi facts: Todd genus one, chi(1) = 0") {
        for (int g = 2; g <= 8; ++g) {
            const ChiPoly chi = mg_chi(g);
            CHECK(chi.n == 3 * g - 3);
            CHECK(chi.at(0) == 1);
            CHECK(chi.poly().eval(Rational(1)).is_zero());
        }
    }

    TEST_CASE("vanishing order at t = -1") {
        for (int g = 2; g <= 8; ++g) {
            CHECK(mg_vanishing_order(g) == 2 * g - 2);
            CHECK(mg_poincare(g).poly().root_multiplicity(Rational(-1)) == 2 * g - 2);
        }
    }

    TEST_CASE("genus three chi around t = -1") {
        const UniPoly shifted = mg_chi(3).poly().taylor_shift(Rational(-1));
        const UniPoly want = UniPoly::from_coeffs({Rational(0), Rational(0), Rational(0),
                                                   Rational(0), Rational(4), Rational(-4),
                                                   Rational(1)});
        CHECK(shifted == want);
    }

    TEST_CASE("reports pass") {
        for (int g = 2; g <= 6; ++g) {
            const Report rep = mg_report(g);
            CHECK(rep.ok());
            CHECK(rep.fail_count() == 0);
        }
    }
}
