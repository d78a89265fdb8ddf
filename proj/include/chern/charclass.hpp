#pragma once

#include <vector>

#include "chern/chern_numbers.hpp"
#include "chern/chernpoly.hpp"
#include "chern/multipoly.hpp"
#include "chern/report.hpp"
#include "chern/unipoly.hpp"

namespace chern {

// x/(1 - e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ... truncated at the order.
UniPoly todd_series(int order);

// Its reciprocal (1 - e^{-x})/x = sum (-x)^j/(j+1)!.
UniPoly todd_reciprocal(int order);

// ch(T) = n + s_1 + s_2/2! + ... + s_n/n!, weights 0..n.
ChernPoly chern_character(int n);

// td(T) = prod_i x_i/(1 - e^{-x_i}) reduced to the c-basis, weights 0..n.
ChernPoly todd_class(int n);

// ch(Lambda^p T*) = sum over p-subsets of exp(-(x_{i_1}+...+x_{i_p})),
// reduced, weights 0..n.
ChernPoly lambda_chern_character(int n, int p);

// prod_i (x_i + t*x_i/(1-e^{-x_i})) truncated at total root degree n.
MultiPoly kclass_product(int n);

// The weight-n classes K(n,k), k = 0..n: K(n,k) is the weight-n component
// of the t^k coefficient of kclass_product(n). Built once per dimension.
class KClassTable {
public:
    explicit KClassTable(int n);
    int dimension() const { return n_; }
    const ChernPoly& entry(int k) const;

private:
    int n_;
    std::vector<ChernPoly> entries_;
};

ChernPoly kclass(int n, int k);

// Printed closed forms, coefficient polynomials evaluated at the concrete n.
ChernPoly kclass2_closed_form(int n);  // n >= 2
ChernPoly kclass4_closed_form(int n);  // n >= 4
ChernPoly kclass6_closed_form(int n);  // n >= 6

// Closed form for twice the full t^2 coefficient (weights n-2..n):
// 2c_{n-2} + (n-1)c_{n-1} + (1/12)(2c_1c_{n-1} + n(3n-5)c_n).
ChernPoly t2_coefficient_closed_form(int n);  // n >= 2

// Compares every applicable printed entry (orders 2, 4, 6 and the full t^2
// coefficient) against the product expansion at this dimension.
Report verify_kclass_lemmas(int n);

// True iff every monomial of K(n,k) contains a factor c_j with
// j >= n - 2*ceil(k/2) + 1; K(n,0) = c_n handled separately.
bool verify_ideal_membership(int n, int k);

// 12*K(n,2) + (n(5-3n)/2)*c_n == c_1*c_{n-1} as an exact identity.
Report second_derivative_identity(int n);  // n >= 2

// With c_1 = 0: 240*K(n,4) - (n/24)(15n^3-150n^2+485n-502)*c_n
// == c_2*c_{n-2} - c_3*c_{n-3}.
Report fourth_derivative_identity(int n);  // n >= 4

// Coefficients a_j with K(n,2k+1) = sum_j a_j * K(n,2j), solved exactly;
// throws std::domain_error if no such combination exists.
std::vector<Rational> odd_order_combination(int n, int k);

// Pairing of a weight-n homogeneous class against Chern-number data.
Rational pair(const ChernPoly& p, const ChernNumbers& data);

}  // namespace chern
