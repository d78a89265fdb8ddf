#include "chern/hilbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "chern/json_io.hpp"
#include "chern/unipoly.hpp"

namespace chern {
namespace {

Integer binom(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

void check_order(int k) {
    if (k < 0) throw std::domain_error("symmetric-product order must be non-negative");
    if (k > kSymmetricOrderCap)
        throw SchemaError("symmetric-product order capped at " +
                          std::to_string(kSymmetricOrderCap));
}

// Coefficients in z of (1 + sign z t^j)^b, truncated at z^cap.
std::vector<UniPoly> binomial_factor(const Integer& b, int j, int sign, int cap) {
    std::vector<UniPoly> out(static_cast<std::size_t>(cap) + 1);
    for (int i = 0; i <= cap; ++i) {
        Integer c = binom(b, static_cast<unsigned long>(i));
        if (sign < 0 && i % 2 == 1) c = -c;
        if (c != 0) out[static_cast<std::size_t>(i)] = UniPoly::monomial(Rational(c), j * i);
    }
    return out;
}

std::vector<UniPoly> convolve(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b,
                              int cap) {
    std::vector<UniPoly> out(static_cast<std::size_t>(cap) + 1);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < static_cast<int>(b.size()) && i + j <= cap; ++j) {
            if (b[static_cast<std::size_t>(j)].is_zero()) continue;
            out[static_cast<std::size_t>(i + j)] +=
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// Inverse of a z-series with unit constant term, triangular back-substitution.
std::vector<UniPoly> invert_series(const std::vector<UniPoly>& p, int cap) {
    std::vector<UniPoly> q(static_cast<std::size_t>(cap) + 1);
    q[0] = UniPoly(Rational(1));
    for (int j = 1; j <= cap; ++j) {
        UniPoly acc;
        for (int i = 1; i <= j && i < static_cast<int>(p.size()); ++i)
            acc += p[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)];
        q[static_cast<std::size_t>(j)] = -acc;
    }
    return q;
}

PoincarePoly poincare_from_unipoly(const UniPoly& p, int d) {
    std::vector<Integer> betti(static_cast<std::size_t>(d) + 1, Integer(0));
    if (p.degree() > d) throw std::logic_error("Poincare polynomial exceeds expected degree");
    for (int j = 0; j <= p.degree(); ++j) {
        Rational c = p.coeff(j);
        betti[static_cast<std::size_t>(j)] = c.to_integer();
    }
    bool connected = d >= 0 && betti[0] >= 1;
    bool duality = true;
    for (int j = 0; 2 * j <= d; ++j)
        if (betti[static_cast<std::size_t>(j)] != betti[static_cast<std::size_t>(d - j)])
            duality = false;
    return PoincarePoly::from_betti(d, std::move(betti), connected, duality);
}

}  // namespace

SurfaceBetti SurfaceBetti::from_betti(std::vector<Integer> betti) {
    if (betti.size() != 5) throw SchemaError("surface Betti list must have 5 entries (b_0..b_4)");
    for (const Integer& b : betti)
        if (b < 0) throw SchemaError("Betti numbers must be non-negative");
    SurfaceBetti s;
    s.betti = std::move(betti);
    return s;
}

const Integer& SurfaceBetti::b(int j) const {
    if (j < 0 || j > 4) throw std::domain_error("surface Betti index out of range");
    return betti[static_cast<std::size_t>(j)];
}

PoincarePoly SurfaceBetti::poincare() const {
    bool duality = betti[0] == betti[4] && betti[1] == betti[3];
    return PoincarePoly::from_betti(4, betti, betti[0] >= 1, duality);
}

Integer SurfaceBetti::euler() const {
    return betti[0] - betti[1] + betti[2] - betti[3] + betti[4];
}

std::vector<std::vector<int>> partitions(int m) {
    if (m < 0) throw std::domain_error("partitions take a non-negative argument");
    std::vector<std::vector<int>> out;
    std::vector<int> mult(static_cast<std::size_t>(m), 0);
    // Descending-part recursion: place parts of size at most `cap` summing
    // to `left`, recording multiplicities.
    auto recurse = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(mult);
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            ++mult[static_cast<std::size_t>(part) - 1];
            self(self, left - part, part);
            --mult[static_cast<std::size_t>(part) - 1];
        }
    };
    recurse(recurse, m, m);
    std::sort(out.begin(), out.end());
    return out;
}

PoincarePoly sym_product_poincare(const SurfaceBetti& S, int k) {
    check_order(k);
    if (k == 0) return PoincarePoly::from_betti(0, {Integer(1)}, true, true);

    std::vector<UniPoly> numer(static_cast<std::size_t>(k) + 1);
    numer[0] = UniPoly(Rational(1));
    std::vector<UniPoly> denom = numer;
    for (int j = 0; j <= 4; ++j) {
        if (S.b(j) == 0) continue;
        if (j % 2 == 1)
            numer = convolve(numer, binomial_factor(S.b(j), j, +1, k), k);
        else
            denom = convolve(denom, binomial_factor(S.b(j), j, -1, k), k);
    }
    std::vector<UniPoly> series = convolve(numer, invert_series(denom, k), k);
    return poincare_from_unipoly(series[static_cast<std::size_t>(k)], 4 * k);
}

PoincarePoly hilb_poincare(const SurfaceBetti& S, int m) {
    check_order(m);
    if (m == 0) return PoincarePoly::from_betti(0, {Integer(1)}, true, true);

    std::vector<UniPoly> sym(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) sym[static_cast<std::size_t>(k)] = sym_product_poincare(S, k).poly();

    UniPoly total;
    for (const std::vector<int>& alpha : partitions(m)) {
        int parts = 0;
        for (int a : alpha) parts += a;
        UniPoly term = UniPoly::monomial(Rational(1), 2 * (m - parts));
        for (int i = 1; i <= m; ++i) {
            int a = alpha[static_cast<std::size_t>(i) - 1];
            if (a > 0) term = term * sym[static_cast<std::size_t>(a)];
        }
        total += term;
    }
    return poincare_from_unipoly(total, 4 * m);
}

Integer hilb_euler(const SurfaceBetti& S, int m) {
    if (m < 0) throw std::domain_error("Hilbert scheme order must be non-negative");
    Integer e = S.euler();
    if (!e.fits_slong_p()) throw std::domain_error("Euler characteristic out of range");
    long exponent = e.get_si();
    UniPoly base(Rational(1));
    for (int k = 1; k <= m; ++k) {
        UniPoly factor =
            UniPoly(Rational(1)) - UniPoly::monomial(Rational(1), k);
        base = (base * factor.pow_trunc(std::labs(exponent), m)).truncated(m);
    }
    UniPoly series = exponent >= 0 ? series_invert(base, m) : base;
    return series.coeff(m).to_integer();
}

Report phi_additivity_check(const SurfaceBetti& S, int m_max) {
    check_order(m_max);
    if (S.euler() == 0)
        throw std::domain_error("phi undefined: Euler characteristic is zero");
    Report report("phi additivity on Hilbert schemes");

    PoincarePoly base = S.poincare();
    Rational phi_base = phi_small(base);
    const bool is_k3 = S.betti == std::vector<Integer>{1, 0, 22, 0, 1};

    for (int m = 1; m <= m_max; ++m) {
        PoincarePoly hp = hilb_poincare(S, m);
        Rational lhs = phi_small(hp);
        Rational rhs = Rational(m) * phi_base;
        std::ostringstream detail;
        detail << "phi(S^[" << m << "]) = " << lhs.str() << ", m*phi(S) = " << rhs.str();
        report.check(lhs == rhs, "phi(S^[" + std::to_string(m) + "]) = " + std::to_string(m) +
                                     "*phi(S)",
                     detail.str());
        if (is_k3) {
            Rational cap = phi_cap(hp);
            report.check(cap.is_zero(), "Phi(K3^[" + std::to_string(m) + "]) = 0",
                         "Phi = " + cap.str());
            PoincarePoly sp = sym_product_poincare(S, m);
            Rational lhs_sym = Rational(12) * phi_cap(sp);
            Rational rhs_sym = Rational(24 * m * (m - 1), 25) * Rational(sp.euler());
            std::ostringstream sym_detail;
            sym_detail << "12 Phi = " << lhs_sym.str() << ", (24m(m-1)/25) e = " << rhs_sym.str();
            report.check(lhs_sym == rhs_sym,
                         "12 Phi(K3^(" + std::to_string(m) + ")) = (24m(m-1)/25) e",
                         sym_detail.str());
        }
    }
    return report;
}

Report kummer_fixture_check(const std::string& fixture_dir) {
    KummerFixture fx = load_kummer_fixture(fixture_dir);
    Report report("generalized Kummer fixtures");

    PoincarePoly k2 = PoincarePoly::from_betti(8, fx.k2_betti, true, true);
    report.pass("K_2 Betti numbers load with duality", "e = " + k2.euler().get_str());
    report.check(k2.euler() == 108, "e(K_2) = 108", "e = " + k2.euler().get_str());

    Rational phi = phi_cap(k2);
    report.check(phi.is_zero(), "Phi(K_2) = 0", "Phi = " + phi.str());

    auto [lhs, rhs] = fo_form(k2);
    report.check(lhs == rhs, "m e = 6 sum (-1)^j (2m-j)^2 b_j for K_2",
                 "lhs = " + lhs.get_str() + ", rhs = " + rhs.get_str());

    report.merge(hk_report(k2));

    const Integer& e8 = fx.k8_euler;
    Integer me = Integer(8) * e8;
    report.check(mpz_divisible_ui_p(me.get_mpz_t(), 24) != 0, "8 e(K_8) = 0 mod 24",
                 "8e = " + me.get_str());
    report.check(mpz_odd_p(e8.get_mpz_t()) != 0,
                 "e(K_8) odd: parity constraint lapses when m = 0 mod 8",
                 "e(K_8) = " + e8.get_str());
    return report;
}

}  // namespace chern
