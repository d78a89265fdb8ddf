#pragma once

#include "chern/invariants.hpp"
#include "chern/report.hpp"

namespace chern {

// Moduli space of stable rank-2 bundles of odd degree over a genus-g curve:
// complex dimension 3g-3, real dimension 6g-6.

// Poincare polynomial via the quotient form
//   [(1+t^3)^{2g} - t^{2g}(1+t)^{2g}] / [(1-t^2)(1-t^4)],
// computed by exact division (zero remainder enforced) and cross-checked
// against the product form (1+t)^{2g-2} sum_{i<g} (1-t+t^2)^{2i} t^{2g-2-2i}.
PoincarePoly mg_poincare(int g);

// chi polynomial (1+t)^{2g-2} (1-t)^{g-1} in dimension n = 3g-3.
ChiPoly mg_chi(int g);

// Exact multiplicity of the root t = -1 of the Poincare polynomial;
// equals 2g-2 for every g >= 2.
int mg_vanishing_order(int g);

// All stated numerical facts for M_g in one report.
Report mg_report(int g);

}  // namespace chern
