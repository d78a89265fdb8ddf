#pragma once

#include <vector>

#include "chern/chern_numbers.hpp"
#include "chern/invariants.hpp"
#include "chern/rational.hpp"
#include "chern/report.hpp"

namespace chern {

// Chern numbers of CP^n from c(T) = (1+h)^{n+1}, <h^n> = 1:
// <c_lambda> = prod_i binom(n+1, lambda_i) over every weight-n monomial.
ChernNumbers cp_chern(int n);

// Chern numbers of a product A x B via the Whitney formula on the union of
// the two root sets, pairing each bidegree factor separately.
ChernNumbers product_chern(const ChernNumbers& A, const ChernNumbers& B);

// Chern numbers of a smooth complete intersection of hypersurfaces of the
// given degrees in CP^{ambient}: c(X) = (1+h)^{ambient+1} / prod(1+d_j h)
// truncated at h^n with n = ambient - #degrees, and <h^n> = prod d_j.
ChernNumbers complete_intersection_chern(int ambient, const std::vector<int>& degrees);

// chi^p = (-1)^n <ch(Lambda^{n-p} T*) td(T)> for p = 0..n; every value must
// come out an integer or the data is inconsistent.
ChiPoly chi_from_chern(const ChernNumbers& data);

// gamma = <c_1 c_{n-1}> / <c_n>; additive on products. For n = 1 the
// convention c_0 = 1 makes gamma = 1.
Rational gamma(const ChernNumbers& data);

// Congruences: with the c1_zero flag, n e = 0 mod 3; e even when
// n = 2 mod 4; 2n c_n + c_2 c_{n-2} - c_3 c_{n-3} = 0 mod 5 for n >= 3.
// Unconditionally, the Newton partial sums
//   S_k = n c_n - s_1 c_{n-1} + ... + (-1)^{k-1} s_{k-1} c_{n-k+1}
// pair to multiples of k+1 for every prime k+1 with 2 <= k <= n.
Report divisibility_suite(const ChernNumbers& data);

// Numerical shadow of the symbolic derivative identities: the
// second-derivative identity <c_1 c_{n-1}> = 6 chi''(-1) + (n(5-3n)/2) chi(-1)
// always, the fourth-derivative identity
//   <c_2 c_{n-2} - c_3 c_{n-3}> = 10 chi''''(-1) - (n/24)(15n^3-150n^2+485n-502) chi(-1)
// when c_1 = 0 and n >= 4, plus a Hodge cross-check when a diamond is given.
Report theorem_checks(const ChernNumbers& data, const HodgeDiamond* H = nullptr);

}  // namespace chern
