#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "chern/hilbert.hpp"
#include "chern/invariants.hpp"
#include "chern/rational.hpp"

using namespace chern;

TEST_SUITE("hilbert") {
    TEST_CASE("partitions as multiplicity vectors") {
        CHECK(partitions(0) == std::vector<std::vector<int>>{{}});
        CHECK(partitions(1).size() == 1);
        CHECK(partitions(4).size() == 5);
        CHECK(partitions(8).size() == 22);
        // Every vector encodes sum i*alpha_i = m.
        for (const auto& alpha : partitions(6)) {
            int total = 0;
            for (std::size_t i = 0; i < alpha.size(); ++i)
                total += static_cast<int>(i + 1) * alpha[i];
            CHECK(total == 6);
        }
    }

    TEST_CASE("surface presets") {
        CHECK(SurfaceBetti::k3().euler() == 24);
        CHECK(SurfaceBetti::torus().euler() == 0);
        CHECK(SurfaceBetti::cp2().euler() == 3);
        CHECK_THROWS_AS(SurfaceBetti::from_betti({1, 0, 22}), SchemaError);
    }

    TEST_CASE("symmetric products of K3") {
        const SurfaceBetti k3 = SurfaceBetti::k3();
        const PoincarePoly s1 = sym_product_poincare(k3, 1);
        CHECK(s1.euler() == 24);
        const PoincarePoly s2 = sym_product_poincare(k3, 2);
        const std::vector<Integer> want = {1, 0, 22, 0, 254, 0, 22, 0, 1};
        CHECK(s2.betti == want);
        CHECK(s2.euler() == 300);
        CHECK(sym_product_poincare(k3, 3).euler() == 2600);
        CHECK(sym_product_poincare(k3, 4).euler() == 17550);
    }

    TEST_CASE("symmetric product Euler numbers are multiset counts") {
        for (const SurfaceBetti& S : {SurfaceBetti::k3(), SurfaceBetti::cp2()}) {
            const long e = S.euler().get_si();
            for (int m = 1; m <= 6; ++m)
                CHECK(sym_product_poincare(S, m).euler() == binomial(e + m - 1, m));
        }
    }

    TEST_CASE("symmetric products of the torus vanish") {
        const SurfaceBetti t4 = SurfaceBetti::torus();
        for (int m = 1; m <= 5; ++m) CHECK(sym_product_poincare(t4, m).euler() == 0);
    }

    TEST_CASE("Hilbert scheme of two points on K3") {
        const PoincarePoly h2 = hilb_poincare(SurfaceBetti::k3(), 2);
        const std::vector<Integer> want = {1, 0, 23, 0, 276, 0, 23, 0, 1};
        CHECK(h2.betti == want);
        CHECK(h2.euler() == 324);
        CHECK(h2.duality);
    }

    TEST_CASE("Hilbert scheme Euler numbers against the product formula") {
        for (const SurfaceBetti& S :
             {SurfaceBetti::k3(), SurfaceBetti::cp2(), SurfaceBetti::torus()}) {
            for (int m = 0; m <= 8; ++m)
                CHECK(hilb_poincare(S, m).euler() == hilb_euler(S, m));
        }
        CHECK(hilb_euler(SurfaceBetti::k3(), 8) == Integer(30178575));
        CHECK(hilb_euler(SurfaceBetti::torus(), 6) == 0);
    }

    TEST_CASE("order guard") {
        CHECK_THROWS_AS(sym_product_poincare(SurfaceBetti::k3(), -1), std::domain_error);
        CHECK_THROWS_AS(sym_product_poincare(SurfaceBetti::k3(), kSymmetricOrderCap + 1),
                        SchemaError);
        CHECK_THROWS_AS(hilb_poincare(SurfaceBetti::k3(), kSymmetricOrderCap + 1), SchemaError);
    }

    TEST_CASE("phi additivity on Hilbert schemes") {
        const SurfaceBetti k3 = SurfaceBetti::k3();
        for (int m = 1; m <= 4; ++m) {
            const PoincarePoly P = hilb_poincare(k3, m);
            CHECK(phi_small(P) == Rational(-20 * m, Integer(3)));
            CHECK(phi_cap(P).is_zero());
        }
        const SurfaceBetti cp2 = SurfaceBetti::cp2();
        for (int m = 1; m <= 4; ++m)
            CHECK(phi_small(hilb_poincare(cp2, m)) == Rational(8 * m, Integer(3)));
        CHECK(phi_additivity_check(k3, 5).ok());
        CHECK(phi_additivity_check(cp2, 5).ok());
    }

    TEST_CASE("normalized Phi of symmetric products of K3") {
        // 12 Phi(K3^(m)) = (24m(m-1)/25) e(K3^(m)) for m >= 2.
        const SurfaceBetti k3 = SurfaceBetti::k3();
        for (int m = 2; m <= 6; ++m) {
            const PoincarePoly P = sym_product_poincare(k3, m);
            const Rational lhs = Rational(12) * phi_cap(P);
            const Rational rhs =
                Rational(24 * m * (m - 1), Integer(25)) * Rational(P.euler());
            CHECK(lhs == rhs);
        }
    }
}
