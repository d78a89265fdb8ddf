#pragma once

#include <map>

#include "chern/chernpoly.hpp"
#include "chern/multipoly.hpp"

namespace chern {

// Configuration ceiling for the number of Chern roots.
inline constexpr int kDimensionCeiling = 10;
inline constexpr int kDefaultDimension = 8;

void check_dimension(int n);  // 1 <= n <= ceiling, else SchemaError

// k-th elementary symmetric polynomial in n roots, truncation bound n.
MultiPoly elementary_in_roots(int n, int k);
// Same with an explicit truncation bound.
MultiPoly elementary_in_roots(int n, int k, int bound);

// Invariance under the n-1 adjacent transpositions (they generate S_n).
bool is_symmetric(const MultiPoly& p);

// Rewrite a symmetric, t-free polynomial in the c-basis via Gauss's
// algorithm: repeatedly subtract the elementary-monomial image of the
// lex-leading term. Throws std::domain_error (naming a violating
// transposition) on non-symmetric input.
ChernPoly reduce_to_elementary(const MultiPoly& p);

// s_k = sum x_i^k in the c-basis via Newton's recurrence, for 1 <= k <= n.
ChernPoly newton_power_sum(int n, int k);

// Exact substitution c_k -> assignments[k] (missing indices unchanged).
ChernPoly substitute(const ChernPoly& p, const std::map<int, ChernPoly>& assignments);

// Inverse direction of reduce_to_elementary: c_k -> e_k(x_1..x_n),
// truncated at total degree n.
MultiPoly expand_in_chern_roots(const ChernPoly& q, int n);

}  // namespace chern
