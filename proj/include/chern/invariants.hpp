#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chern/chern_numbers.hpp"
#include "chern/rational.hpp"
#include "chern/report.hpp"
#include "chern/unipoly.hpp"

namespace chern {

// Betti numbers b_0..b_d of a real d-manifold. The connected / duality
// attributes are explicit input flags, validated at construction when set
// and re-checkable on demand — orbifold-style data may legitimately carry
// neither.
struct PoincarePoly {
    int d = 0;
    std::vector<Integer> betti;
    bool connected = false;
    bool duality = false;

    static PoincarePoly from_betti(int d, std::vector<Integer> betti, bool connected = false,
                                   bool duality = false);

    const Integer& b(int j) const;
    UniPoly poly() const;

    Rational value_at(const Rational& t) const { return poly().eval(t); }
    Rational derivative_at(int order, const Rational& t) const {
        return poly().derivative(order).eval(t);
    }
    Integer euler() const;  // P(-1)

    void check_connected() const;  // b_0 >= 1
    void check_duality() const;    // b_j == b_{d-j}, throws naming the index
};

// chi^0..chi^n of a complex n-fold.
struct ChiPoly {
    int n = 0;
    std::vector<Integer> chi;

    static ChiPoly from_coeffs(int n, std::vector<Integer> chi);
    const Integer& at(int p) const;
    UniPoly poly() const;
    Integer euler() const;      // chi(-1)
    bool serre_ok() const;      // chi^{n-p} == (-1)^n chi^p
};

// Hodge numbers h^{p,q} on an (n+1)x(n+1) grid.
struct HodgeDiamond {
    int n = 0;
    std::vector<std::vector<Integer>> h;  // h[p][q]

    static HodgeDiamond from_grid(int n, std::vector<std::vector<Integer>> h);
    const Integer& at(int p, int q) const;

    // Violated cell, if any.
    std::optional<std::pair<int, int>> conjugation_violation() const;  // h^{pq} != h^{qp}
    std::optional<std::pair<int, int>> serre_violation() const;        // h^{pq} != h^{n-p,n-q}
    std::optional<std::pair<int, int>> mirror_violation() const;       // h^{pq} != h^{n-p,q}

    Integer euler() const;
};

// Primitive Betti numbers beta_2..beta_{2m} of a quaternion-Kaehler
// 4m-manifold; beta[k-1] holds beta_{2k}.
struct QKBetti {
    int m = 0;
    std::vector<Integer> beta;

    static QKBetti from_beta(int m, std::vector<Integer> beta);
    const Integer& beta2k(int k) const;
    void check_nonnegative() const;
};

// Phi = 6P''(-1) + (d(5-3d)/2) P(-1). Requires even d; callers flag
// applicability when d = 2 mod 4.
Rational phi_cap(const PoincarePoly& P);

// (m*e, 6*sum_{j<2m} (-1)^j (2m-j)^2 b_j) for d = 4m under duality.
std::pair<Integer, Integer> fo_form(const PoincarePoly& P);

// phi = 4P''(-1)/P(-1) - d^2; undefined when e = 0.
Rational phi_small(const PoincarePoly& P);

// Coefficient list [e(M), l_1, ..., l_order] where sum l_k t^k is the
// formal log of P(-1+t)/e(M). The constant slot carries e(M) itself.
UniPoly log_expansion(const PoincarePoly& P, int order);

PoincarePoly hodge_to_poincare(const HodgeDiamond& H);
ChiPoly hodge_to_chi(const HodgeDiamond& H);
HodgeDiamond mirror(const HodgeDiamond& H);

// Phi(P(H)) == 2[6chi''(-1) + (n(5-3n)/2) chi(-1)]
//             + 6 sum (-1)^{p+q} p q (h^{pq} - (-1)^n h^{n-p,q})
// for every diamond with conjugation symmetry and Serre duality. The
// parity factor on the correction term makes the identity hold in odd
// dimensions as well; for even n it reduces to the plain difference.
Report phi_lemma_check(const HodgeDiamond& H);

// psi = 4chi''(-1)/chi(-1) - n^2.
Rational psi(const ChiPoly& chi);

// Hyper-Kaehler constraints for d = 4m: Phi = 0, odd Betti numbers
// divisible by 4, m*e = 0 mod 24, e even unless m = 0 mod 8.
Report hk_report(const PoincarePoly& P);

// P'(-1) of a 7-manifold with duality and b_0 = 1; equals
// -b_3 + 3b_2 - 5b_1 + 7.
Integer g2_quantity(const PoincarePoly& P);

Report spin7_report(const PoincarePoly& P, const std::optional<Integer>& b4_minus = {},
                    const ChernNumbers* chern = nullptr);

// sum_k k(m+1-k)(m+1-2k) beta_{2k}; zero iff the constraint is satisfied.
Rational qk_constraint(const QKBetti& beta);

}  // namespace chern
