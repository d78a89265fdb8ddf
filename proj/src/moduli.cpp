#include "chern/moduli.hpp"

#include <sstream>
#include <stdexcept>

#include "chern/unipoly.hpp"

namespace chern {
namespace {

void check_genus(int g) {
    if (g < 2) throw std::domain_error("genus must be at least 2");
}

UniPoly quotient_form(int g) {
    UniPoly one(Rational(1));
    UniPoly t = UniPoly::variable();
    UniPoly t2 = UniPoly::monomial(Rational(1), 2);
    UniPoly t3 = UniPoly::monomial(Rational(1), 3);
    UniPoly t4 = UniPoly::monomial(Rational(1), 4);

    UniPoly numer = (one + t3).pow(2 * g) - UniPoly::monomial(Rational(1), 2 * g) * (one + t).pow(2 * g);
    auto [q1, r1] = UniPoly::divmod(numer, one - t2);
    if (!r1.is_zero()) throw std::logic_error("division by 1 - t^2 left a remainder");
    auto [q2, r2] = UniPoly::divmod(q1, one - t4);
    if (!r2.is_zero()) throw std::logic_error("division by 1 - t^4 left a remainder");
    return q2;
}

UniPoly product_form(int g) {
    UniPoly one(Rational(1));
    UniPoly t = UniPoly::variable();
    UniPoly quad = one - t + UniPoly::monomial(Rational(1), 2);  // 1 - t + t^2
    UniPoly bracket;
    for (int i = 0; i < g; ++i)
        bracket += quad.pow(2 * i) * UniPoly::monomial(Rational(1), 2 * (g - 1 - i));
    return (one + t).pow(2 * g - 2) * bracket;
}

}  // namespace

PoincarePoly mg_poincare(int g) {
    check_genus(g);
    UniPoly P = quotient_form(g);
    if (P != product_form(g))
        throw std::logic_error("quotient and product forms of P(M_g) disagree");

    const int d = 6 * g - 6;
    if (P.degree() != d) throw std::logic_error("P(M_g) has unexpected degree");
    std::vector<Integer> betti;
    betti.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) betti.push_back(P.coeff(j).to_integer());
    bool duality = true;
    for (int j = 0; 2 * j <= d; ++j)
        if (betti[static_cast<std::size_t>(j)] != betti[static_cast<std::size_t>(d - j)])
            duality = false;
    return PoincarePoly::from_betti(d, std::move(betti), true, duality);
}

ChiPoly mg_chi(int g) {
    check_genus(g);
    UniPoly one(Rational(1));
    UniPoly t = UniPoly::variable();
    UniPoly chi = (one + t).pow(2 * g - 2) * (one - t).pow(g - 1);
    const int n = 3 * g - 3;
    if (chi.degree() != n) throw std::logic_error("chi(M_g) has unexpected degree");
    std::vector<Integer> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) coeffs.push_back(chi.coeff(p).to_integer());
    return ChiPoly::from_coeffs(n, std::move(coeffs));
}

int mg_vanishing_order(int g) {
    check_genus(g);
    return mg_poincare(g).poly().root_multiplicity(Rational(-1));
}

Report mg_report(int g) {
    check_genus(g);
    Report report("rank-2 moduli space, genus " + std::to_string(g));

    PoincarePoly P = mg_poincare(g);  // internally asserts both forms agree
    report.pass("quotient and product forms of P agree",
                "degree " + std::to_string(P.d) + " polynomial");

    int mult = P.poly().root_multiplicity(Rational(-1));
    report.check(mult == 2 * g - 2, "multiplicity of t=-1 in P equals 2g-2",
                 "multiplicity = " + std::to_string(mult));

    Rational phi = phi_cap(P);
    if (P.d % 4 == 0)
        report.check(phi.is_zero(), "Phi vanishes (d = 0 mod 4)", "Phi = " + phi.str());
    else
        report.pass("Phi not applicable (d = 2 mod 4)", "Phi = " + phi.str());

    ChiPoly chi = mg_chi(g);
    report.check(chi.serre_ok(), "chi^{n-p} = (-1)^n chi^p", "n = " + std::to_string(chi.n));
    report.check(chi.at(0) == 1, "Todd genus chi^0 = 1", "chi^0 = " + chi.at(0).get_str());

    report.check(P.b(2) == 1, "b_2 = 1", "b_2 = " + P.b(2).get_str());
    report.check(P.b(3) == 2 * Integer(g), "b_3 = 2g", "b_3 = " + P.b(3).get_str());

    Integer expected_p1;
    mpz_ui_pow_ui(expected_p1.get_mpz_t(), 2, static_cast<unsigned long>(2 * g - 2));
    expected_p1 *= g;
    Rational p1 = P.value_at(Rational(1));
    report.check(p1 == Rational(expected_p1), "P(1) = 2^{2g-2} g", "P(1) = " + p1.str());

    Integer e = P.euler();
    report.check(e == 0, "P(-1) = 0", "e = " + e.get_str());

    Rational chi1 = chi.poly().eval(Rational(1));
    report.check(chi1.is_zero(), "signature chi(1) = 0", "chi(1) = " + chi1.str());
    return report;
}

}  // namespace chern
