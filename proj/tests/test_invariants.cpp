#include "doctest.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "chern/invariants.hpp"
#include "chern/rational.hpp"

using namespace chern;

namespace {

PoincarePoly k3_betti() { return PoincarePoly::from_betti(4, {1, 0, 22, 0, 1}, true, true); }

HodgeDiamond k3_diamond() {
    return HodgeDiamond::from_grid(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}});
}

HodgeDiamond quintic_diamond() {
    return HodgeDiamond::from_grid(
        3, {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}});
}

}  // namespace

TEST_SUITE("invariants") {
    TEST_CASE("Poincare data validation") {
        CHECK_NOTHROW(k3_betti());
        CHECK_THROWS_AS(PoincarePoly::from_betti(4, {0, 0, 22, 0, 1}, true, true),
                        std::domain_error);
        CHECK_THROWS_AS(PoincarePoly::from_betti(4, {1, 0, 22, 1, 1}, true, true),
                        std::domain_error);
        CHECK_THROWS_AS(PoincarePoly::from_betti(4, {1, 0, 22, 0}, false, false), SchemaError);
        // Without the flags, asymmetric data is accepted as-is.
        CHECK_NOTHROW(PoincarePoly::from_betti(4, {1, 0, 22, 1, 1}, false, false));
    }

    TEST_CASE("Poincare evaluation and Euler characteristic") {
        const PoincarePoly P = k3_betti();
        CHECK(P.euler() == 24);
        CHECK(P.value_at(Rational(1)) == Rational(24));
        CHECK(P.derivative_at(1, Rational(-1)) == Rational(-48));
        CHECK(P.b(2) == 22);
        CHECK_THROWS_AS(P.b(5), std::domain_error);
    }

    TEST_CASE("Phi on reference spaces") {
        CHECK(phi_cap(k3_betti()).is_zero());
        const PoincarePoly t4 = PoincarePoly::from_betti(4, {1, 4, 6, 4, 1}, true, true);
        CHECK(phi_cap(t4).is_zero());
        const PoincarePoly cp2 = PoincarePoly::from_betti(4, {1, 0, 1, 0, 1}, true, true);
        CHECK(phi_cap(cp2) == Rational(42));
        CHECK_THROWS_AS(phi_cap(PoincarePoly::from_betti(3, {1, 2, 2, 1}, true, true)),
                        std::domain_error);
    }

    TEST_CASE("fourth-order form tracks Phi") {
        const auto [k3l, k3r] = fo_form(k3_betti());
        CHECK(k3l == 24);
        CHECK(k3r == 24);
        const PoincarePoly cp2 = PoincarePoly::from_betti(4, {1, 0, 1, 0, 1}, true, true);
        const auto [cl, cr] = fo_form(cp2);
        CHECK(cl == 3);
        CHECK(cr == 24);
        CHECK(phi_cap(cp2) == Rational(2) * Rational(cr - cl));
        const PoincarePoly t4 = PoincarePoly::from_betti(4, {1, 4, 6, 4, 1}, true, true);
        const auto [tl, tr] = fo_form(t4);
        CHECK(tl == 0);
        CHECK(tr == 0);
    }

    TEST_CASE("phi on reference spaces") {
        CHECK(phi_small(k3_betti()) == Rational(-20, Integer(3)));
        const PoincarePoly cp2 = PoincarePoly::from_betti(4, {1, 0, 1, 0, 1}, true, true);
        CHECK(phi_small(cp2) == Rational(8, Integer(3)));
    }

    TEST_CASE("diamond validation and folding") {
        const HodgeDiamond K3 = k3_diamond();
        CHECK(!K3.conjugation_violation());
        CHECK(!K3.serre_violation());
        CHECK(K3.euler() == 24);
        const PoincarePoly P = hodge_to_poincare(K3);
        CHECK(P.d == 4);
        CHECK(P.b(1) == 0);
        CHECK(P.b(2) == 22);
        const ChiPoly chi = hodge_to_chi(K3);
        CHECK(chi.at(0) == 2);
        CHECK(chi.at(1) == -20);
        CHECK(chi.at(2) == 2);
        CHECK(chi.euler() == 24);
        CHECK(chi.serre_ok());
    }

    TEST_CASE("quintic diamond chi vector") {
        const ChiPoly chi = hodge_to_chi(quintic_diamond());
        CHECK(chi.at(0) == 0);
        CHECK(chi.at(1) == 100);
        CHECK(chi.at(2) == -100);
        CHECK(chi.at(3) == 0);
        CHECK(hodge_to_poincare(quintic_diamond()).euler() == -200);
    }

    TEST_CASE("psi") {
        // chi(t) = 2 - 20t + 2t^2: chi''(-1) = 4, chi(-1) = 24.
        CHECK(psi(hodge_to_chi(k3_diamond())) == Rational(-10, Integer(3)));
        CHECK(psi(hodge_to_chi(quintic_diamond())) == Rational(-5));
        CHECK_THROWS_AS(psi(ChiPoly::from_coeffs(1, {1, 1})), std::domain_error);
    }

    TEST_CASE("Phi lemma on fixed diamonds") {
        CHECK(phi_lemma_check(k3_diamond()).ok());
        CHECK(phi_lemma_check(quintic_diamond()).ok());
        // Broken conjugation symmetry is rejected with the cell named.
        HodgeDiamond bad = k3_diamond();
        bad.h[0][1] = 5;
        CHECK_THROWS_AS(phi_lemma_check(bad), std::domain_error);
    }

    TEST_CASE("mirror") {
        const HodgeDiamond K3 = k3_diamond();
        CHECK(mirror(mirror(K3)).h == K3.h);
        CHECK(mirror(K3).euler() == 24);  // (-1)^2 e
        const HodgeDiamond Q = quintic_diamond();
        const HodgeDiamond M = mirror(Q);
        CHECK(M.euler() == 200);
        const ChiPoly cq = hodge_to_chi(Q);
        const ChiPoly cm = hodge_to_chi(M);
        for (int p = 0; p <= 3; ++p) CHECK(cm.at(p) == cq.at(3 - p));
    }

    TEST_CASE("hyper-Kaehler screen") {
        CHECK(hk_report(k3_betti()).ok());
        const PoincarePoly cp2 = PoincarePoly::from_betti(4, {1, 0, 1, 0, 1}, true, true);
        CHECK_FALSE(hk_report(cp2).ok());
    }

    TEST_CASE("G2 quantity") {
        const PoincarePoly joyce =
            PoincarePoly::from_betti(7, {1, 0, 12, 43, 43, 12, 0, 1}, true, true);
        CHECK(g2_quantity(joyce) == 0);
        const PoincarePoly s7 = PoincarePoly::from_betti(7, {1, 0, 0, 0, 0, 0, 0, 1}, true, true);
        CHECK(g2_quantity(s7) == 7);  // -0 + 0 - 0 + 7
    }

    TEST_CASE("Spin(7) screen") {
        const PoincarePoly joyce =
            PoincarePoly::from_betti(8, {1, 0, 12, 16, 150, 16, 12, 0, 1}, true, true);
        CHECK(spin7_report(joyce, Integer(43)).ok());
    }

    TEST_CASE("quaternionic balance") {
        const QKBetti hp2 = QKBetti::from_beta(2, {0, 0});
        CHECK(qk_constraint(hp2).is_zero());
        const QKBetti gr = QKBetti::from_beta(2, {1, 1});
        // k=1: 1*2*1*1 = 2; k=2: 2*1*(-1)*1 = -2.
        CHECK(qk_constraint(gr).is_zero());
        const QKBetti off = QKBetti::from_beta(2, {1, 0});
        CHECK(qk_constraint(off) == Rational(2));
    }
}
