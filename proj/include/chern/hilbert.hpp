#pragma once

#include <string>
#include <vector>

#include "chern/invariants.hpp"
#include "chern/rational.hpp"
#include "chern/report.hpp"

namespace chern {

// Betti numbers b_0..b_4 of a compact 4-manifold underlying a surface.
struct SurfaceBetti {
    std::vector<Integer> betti;

    static SurfaceBetti from_betti(std::vector<Integer> betti);
    static SurfaceBetti k3() { return from_betti({1, 0, 22, 0, 1}); }
    static SurfaceBetti torus() { return from_betti({1, 4, 6, 4, 1}); }
    static SurfaceBetti cp2() { return from_betti({1, 0, 1, 0, 1}); }

    const Integer& b(int j) const;
    PoincarePoly poincare() const;
    Integer euler() const;
};

// Largest admissible order for symmetric products and punctual Hilbert
// schemes; beyond this the expansions get needlessly expensive.
inline constexpr int kSymmetricOrderCap = 12;

// Partitions of m as multiplicity vectors: entry i-1 counts parts of size
// i, so sum i*alpha_i = m. Sorted ascending lexicographically. partitions(0)
// is the single empty partition.
std::vector<std::vector<int>> partitions(int m);

// Poincare polynomial of the k-fold symmetric product S^(k): the z^k
// coefficient of prod_j (1 + z t^j)^{b_j} / (1 - z t^j)^{b_j} taken over
// odd j in the numerator and even j in the denominator.
PoincarePoly sym_product_poincare(const SurfaceBetti& S, int k);

// Poincare polynomial of the punctual Hilbert scheme S^[m]:
// sum over partitions alpha of t^{2(m - sum_i alpha_i)} prod_i P(S^(alpha_i)).
// The exponent counts m minus the total number of parts.
PoincarePoly hilb_poincare(const SurfaceBetti& S, int m);

// Euler characteristic of S^[m], the q^m coefficient of
// prod_{k>=1} (1 - q^k)^{-e(S)}.
Integer hilb_euler(const SurfaceBetti& S, int m);

// phi(S^[m]) = m phi(S) for m = 1..m_max; requires e(S) != 0. For the K3
// surface additionally checks Phi(S^[m]) = 0 and the symmetric-product
// normalization 12 Phi(S^(m)) = (24m(m-1)/25) e(S^(m)).
Report phi_additivity_check(const SurfaceBetti& S, int m_max);

// Frozen generalized-Kummer data loaded from fixture_dir/kummer.json.
Report kummer_fixture_check(const std::string& fixture_dir);

}  // namespace chern
