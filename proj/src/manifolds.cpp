#include "chern/manifolds.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "chern/charclass.hpp"
#include "chern/chernpoly.hpp"
#include "chern/hilbert.hpp"
#include "chern/multipoly.hpp"
#include "chern/symmetric.hpp"
#include "chern/unipoly.hpp"

namespace chern {
namespace {

bool divisible(const Integer& x, long m) { return mpz_divisible_ui_p(x.get_mpz_t(), m) != 0; }

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Integer int_pow(const Integer& base, int e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

ChernPoly ck_or_one(int j) { return ChernPoly::ck(j); }  // ck(0) is the constant 1

}  // namespace

ChernNumbers cp_chern(int n) {
    check_dimension(n);
    ChernNumbers out;
    out.n = n;
    out.c1_zero = false;
    for (const std::vector<int>& alpha : partitions(n)) {
        Integer value = 1;
        for (int i = 1; i <= n; ++i) {
            int e = alpha[static_cast<std::size_t>(i) - 1];
            if (e > 0) value *= int_pow(binomial(n + 1, i), e);
        }
        out.pairings[ChernPoly::monomial_key(alpha)] = value;
    }
    return out;
}

ChernNumbers product_chern(const ChernNumbers& A, const ChernNumbers& B) {
    if (A.n < 1 || B.n < 1) throw std::domain_error("product factors need dimension >= 1");
    const int n = A.n + B.n;
    check_dimension(n);

    ChernNumbers out;
    out.n = n;
    out.c1_zero = A.c1_zero && B.c1_zero;

    for (const std::vector<int>& alpha : partitions(n)) {
        // c_lambda(A x B) as a symmetric polynomial in the union of the roots.
        MultiPoly expansion = MultiPoly::constant(n, n, Rational(1));
        for (int i = 1; i <= n; ++i)
            for (int rep = 0; rep < alpha[static_cast<std::size_t>(i) - 1]; ++rep)
                expansion = expansion * elementary_in_roots(n, i);

        // Group the bidegree-(n_A, n_B) terms by their x-monomial (the
        // first A.n slots); pair away the y-part, then the x-part.
        std::map<std::vector<int>, MultiPoly> groups;
        for (const auto& [exps, coeff] : expansion.terms()) {
            long xdeg = 0;
            for (int i = 0; i < A.n; ++i) xdeg += exps[static_cast<std::size_t>(i)];
            if (xdeg != A.n) continue;  // wrong bidegree: pairs to zero
            std::vector<int> xkey(exps.begin(), exps.begin() + A.n);
            std::vector<int> ykey(exps.begin() + A.n, exps.begin() + n);
            ykey.push_back(0);
            auto it = groups.find(xkey);
            if (it == groups.end())
                it = groups.emplace(std::move(xkey), MultiPoly(B.n, B.n)).first;
            it->second.add_term(ykey, coeff);
        }

        MultiPoly xpoly(A.n, A.n);
        for (const auto& [xkey, ypoly] : groups) {
            Rational paired = pair(reduce_to_elementary(ypoly), B);
            if (paired.is_zero()) continue;
            std::vector<int> exps = xkey;
            exps.push_back(0);
            xpoly.add_term(exps, paired);
        }

        Rational value = xpoly.is_zero() ? Rational(0) : pair(reduce_to_elementary(xpoly), A);
        out.pairings[ChernPoly::monomial_key(alpha)] = value.to_integer();
    }
    return out;
}

ChernNumbers complete_intersection_chern(int ambient, const std::vector<int>& degrees) {
    const int n = ambient - static_cast<int>(degrees.size());
    if (n < 1) throw std::domain_error("complete intersection dimension must be >= 1");
    check_dimension(n);
    for (int d : degrees)
        if (d < 1) throw std::domain_error("hypersurface degrees must be positive");

    UniPoly one(Rational(1));
    UniPoly h = UniPoly::variable();
    UniPoly numer = (one + h).pow(ambient + 1).truncated(n);
    UniPoly denom(Rational(1));
    for (int d : degrees) denom = (denom * (one + Rational(d) * h)).truncated(n);
    UniPoly series = (numer * series_invert(denom, n)).truncated(n);

    std::vector<Integer> g(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) g[static_cast<std::size_t>(k)] = series.coeff(k).to_integer();

    Integer top_degree = 1;
    for (int d : degrees) top_degree *= d;

    ChernNumbers out;
    out.n = n;
    out.c1_zero = g[1] == 0;
    for (const std::vector<int>& alpha : partitions(n)) {
        Integer value = top_degree;
        for (int i = 1; i <= n; ++i) {
            int e = alpha[static_cast<std::size_t>(i) - 1];
            if (e > 0) value *= int_pow(g[static_cast<std::size_t>(i)], e);
        }
        out.pairings[ChernPoly::monomial_key(alpha)] = value;
    }
    return out;
}

ChiPoly chi_from_chern(const ChernNumbers& data) {
    const int n = data.n;
    check_dimension(n);
    ChernPoly td = todd_class(n);
    const int sign = (n % 2 == 0) ? 1 : -1;

    std::vector<Integer> chi(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        ChernPoly integrand = (lambda_chern_character(n, n - p) * td).weight_part(n);
        Rational value = Rational(sign) * pair(integrand, data);
        if (!value.is_integer())
            throw std::domain_error("non-integral chi^" + std::to_string(p) +
                                    ": Chern data inconsistent");
        chi[static_cast<std::size_t>(p)] = value.to_integer();
    }
    return ChiPoly::from_coeffs(n, std::move(chi));
}

Rational gamma(const ChernNumbers& data) {
    Integer e = data.euler();
    if (e == 0) throw std::domain_error("gamma undefined: Euler characteristic is zero");
    Rational top = pair(ChernPoly::ck(1) * ck_or_one(data.n - 1), data);
    return top / Rational(e);
}

Report divisibility_suite(const ChernNumbers& data) {
    const int n = data.n;
    check_dimension(n);
    Report report("divisibility suite (n = " + std::to_string(n) + ")");
    Integer e = data.euler();

    if (data.c1_zero) {
        Integer ne = Integer(n) * e;
        report.check(divisible(ne, 3), "n e = 0 mod 3 (c_1 = 0)", "n e = " + ne.get_str());

        if (n % 4 == 2)
            report.check(divisible(e, 2), "e even (c_1 = 0, n = 2 mod 4)", "e = " + e.get_str());

        if (n >= 3) {
            ChernPoly combo = Rational(2 * n) * ChernPoly::ck(n) +
                              ChernPoly::ck(2) * ck_or_one(n - 2) -
                              ChernPoly::ck(3) * ck_or_one(n - 3);
            Rational value = pair(combo, data);
            report.check(value.is_integer() && divisible(value.to_integer(), 5),
                         "2n c_n + c_2 c_{n-2} - c_3 c_{n-3} = 0 mod 5 (c_1 = 0)",
                         "value = " + value.str());
        }
    }

    for (int k = 2; k <= n; ++k) {
        if (!is_prime(k + 1)) continue;
        ChernPoly acc = Rational(n) * ChernPoly::ck(n);
        for (int i = 1; i <= k - 1; ++i) {
            ChernPoly term = newton_power_sum(n, i) * ChernPoly::ck(n - i);
            if (i % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        Rational value = pair(acc, data);
        std::ostringstream name;
        name << "Newton partial sum S_" << k << " = 0 mod " << (k + 1);
        report.check(value.is_integer() && divisible(value.to_integer(), k + 1), name.str(),
                     "S_" + std::to_string(k) + " = " + value.str());
    }
    return report;
}

Report theorem_checks(const ChernNumbers& data, const HodgeDiamond* H) {
    const int n = data.n;
    check_dimension(n);
    Report report("derivative identities on Chern data (n = " + std::to_string(n) + ")");

    ChiPoly chi = chi_from_chern(data);
    UniPoly chipoly = chi.poly();
    Rational chi_m1 = chipoly.eval(Rational(-1));

    Rational lhs2 = pair(ChernPoly::ck(1) * ck_or_one(n - 1), data);
    Rational rhs2 = Rational(6) * chipoly.derivative(2).eval(Rational(-1)) +
                    Rational(Integer(n) * (5 - 3 * Integer(n)), Integer(2)) * chi_m1;
    report.check(lhs2 == rhs2, "<c_1 c_{n-1}> = 6 chi''(-1) + (n(5-3n)/2) chi(-1)",
                 "lhs = " + lhs2.str() + ", rhs = " + rhs2.str());

    if (data.c1_zero && n >= 4) {
        Rational lhs4 = pair(ChernPoly::ck(2) * ck_or_one(n - 2), data) -
                        pair(ChernPoly::ck(3) * ck_or_one(n - 3), data);
        Integer nn(n);
        Rational factor =
            Rational(nn * (15 * nn * nn * nn - 150 * nn * nn + 485 * nn - 502), Integer(24));
        Rational rhs4 =
            Rational(10) * chipoly.derivative(4).eval(Rational(-1)) - factor * chi_m1;
        report.check(lhs4 == rhs4,
                     "<c_2 c_{n-2} - c_3 c_{n-3}> = 10 chi''''(-1) - (n/24)(15n^3-150n^2+485n-502) chi(-1)",
                     "lhs = " + lhs4.str() + ", rhs = " + rhs4.str());
    }

    if (H != nullptr) {
        ChiPoly from_hodge = hodge_to_chi(*H);
        bool same = from_hodge.n == chi.n && from_hodge.chi == chi.chi;
        report.check(same, "chi from Chern data matches chi from the Hodge diamond",
                     same ? "" : "coefficient lists differ");
    }
    return report;
}

}  // namespace chern
