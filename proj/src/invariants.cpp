#include "chern/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "chern/charclass.hpp"
#include "chern/chernpoly.hpp"

namespace chern {
namespace {

bool divisible(const Integer& x, long m) { return mpz_divisible_ui_p(x.get_mpz_t(), m) != 0; }

std::string cell_name(const char* symbol, int p, int q) {
    std::ostringstream out;
    out << symbol << "^{" << p << "," << q << "}";
    return out.str();
}

}  // namespace

PoincarePoly PoincarePoly::from_betti(int d, std::vector<Integer> betti, bool connected,
                                      bool duality) {
    if (d < 0) throw SchemaError("dimension d must be non-negative");
    if (betti.size() != static_cast<std::size_t>(d) + 1)
        throw SchemaError("Betti list must have d+1 entries");
    for (const Integer& b : betti)
        if (b < 0) throw SchemaError("Betti numbers must be non-negative");
    PoincarePoly P;
    P.d = d;
    P.betti = std::move(betti);
    P.connected = connected;
    P.duality = duality;
    if (connected) P.check_connected();
    if (duality) P.check_duality();
    return P;
}

const Integer& PoincarePoly::b(int j) const {
    if (j < 0 || j > d) throw std::domain_error("Betti index out of range");
    return betti[static_cast<std::size_t>(j)];
}

UniPoly PoincarePoly::poly() const {
    std::vector<Rational> coeffs;
    coeffs.reserve(betti.size());
    for (const Integer& b : betti) coeffs.emplace_back(b);
    return UniPoly::from_coeffs(coeffs);
}

Integer PoincarePoly::euler() const {
    Rational e = value_at(Rational(-1));
    return e.to_integer();
}

void PoincarePoly::check_connected() const {
    if (d >= 0 && betti[0] < 1) throw std::domain_error("connectedness fails: b_0 < 1");
}

void PoincarePoly::check_duality() const {
    for (int j = 0; 2 * j <= d; ++j)
        if (b(j) != b(d - j)) {
            std::ostringstream out;
            out << "duality fails: b_" << j << " != b_" << (d - j);
            throw std::domain_error(out.str());
        }
}

ChiPoly ChiPoly::from_coeffs(int n, std::vector<Integer> chi) {
    if (n < 0) throw SchemaError("dimension n must be non-negative");
    if (chi.size() != static_cast<std::size_t>(n) + 1)
        throw SchemaError("chi list must have n+1 entries");
    ChiPoly c;
    c.n = n;
    c.chi = std::move(chi);
    return c;
}

const Integer& ChiPoly::at(int p) const {
    if (p < 0 || p > n) throw std::domain_error("chi index out of range");
    return chi[static_cast<std::size_t>(p)];
}

UniPoly ChiPoly::poly() const {
    std::vector<Rational> coeffs;
    coeffs.reserve(chi.size());
    for (const Integer& c : chi) coeffs.emplace_back(c);
    return UniPoly::from_coeffs(coeffs);
}

Integer ChiPoly::euler() const { return poly().eval(Rational(-1)).to_integer(); }

bool ChiPoly::serre_ok() const {
    const int sign = (n % 2 == 0) ? 1 : -1;
    for (int p = 0; p <= n; ++p)
        if (at(n - p) != sign * at(p)) return false;
    return true;
}

HodgeDiamond HodgeDiamond::from_grid(int n, std::vector<std::vector<Integer>> h) {
    if (n < 0) throw SchemaError("dimension n must be non-negative");
    if (h.size() != static_cast<std::size_t>(n) + 1)
        throw SchemaError("Hodge grid must have n+1 rows");
    for (const auto& row : h) {
        if (row.size() != static_cast<std::size_t>(n) + 1)
            throw SchemaError("Hodge grid must have n+1 columns per row");
        for (const Integer& v : row)
            if (v < 0) throw SchemaError("Hodge numbers must be non-negative");
    }
    HodgeDiamond H;
    H.n = n;
    H.h = std::move(h);
    return H;
}

const Integer& HodgeDiamond::at(int p, int q) const {
    if (p < 0 || p > n || q < 0 || q > n) throw std::domain_error("Hodge index out of range");
    return h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

std::optional<std::pair<int, int>> HodgeDiamond::conjugation_violation() const {
    for (int p = 0; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
            if (at(p, q) != at(q, p)) return std::make_pair(p, q);
    return std::nullopt;
}

std::optional<std::pair<int, int>> HodgeDiamond::serre_violation() const {
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (at(p, q) != at(n - p, n - q)) return std::make_pair(p, q);
    return std::nullopt;
}

std::optional<std::pair<int, int>> HodgeDiamond::mirror_violation() const {
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            if (at(p, q) != at(n - p, q)) return std::make_pair(p, q);
    return std::nullopt;
}

Integer HodgeDiamond::euler() const {
    Integer e = 0;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
            e += ((p + q) % 2 == 0 ? at(p, q) : -at(p, q));
    return e;
}

QKBetti QKBetti::from_beta(int m, std::vector<Integer> beta) {
    if (m < 1) throw SchemaError("quaternionic dimension m must be positive");
    if (beta.size() != static_cast<std::size_t>(m))
        throw SchemaError("primitive Betti list must have m entries (beta_2..beta_2m)");
    QKBetti b;
    b.m = m;
    b.beta = std::move(beta);
    return b;
}

const Integer& QKBetti::beta2k(int k) const {
    if (k < 1 || k > m) throw std::domain_error("primitive Betti index out of range");
    return beta[static_cast<std::size_t>(k) - 1];
}

void QKBetti::check_nonnegative() const {
    for (const Integer& v : beta)
        if (v < 0) throw std::domain_error("primitive Betti numbers must be non-negative");
}

Rational phi_cap(const PoincarePoly& P) {
    if (P.d % 2 != 0) throw std::domain_error("Phi requires even real dimension");
    const Rational at_minus1(-1);
    Rational second = P.derivative_at(2, at_minus1);
    Rational value = P.value_at(at_minus1);
    return Rational(6) * second + Rational(Integer(P.d) * (5 - 3 * Integer(P.d)), Integer(2)) * value;
}

std::pair<Integer, Integer> fo_form(const PoincarePoly& P) {
    if (P.d % 4 != 0) throw std::domain_error("the bilinear comparison requires d = 4m");
    P.check_duality();
    const int m = P.d / 4;
    Integer lhs = Integer(m) * P.euler();
    Integer rhs = 0;
    for (int j = 0; j < 2 * m; ++j) {
        Integer weight = Integer(2 * m - j) * Integer(2 * m - j);
        rhs += (j % 2 == 0 ? weight : -weight) * P.b(j);
    }
    rhs *= 6;
    return {lhs, rhs};
}

Rational phi_small(const PoincarePoly& P) {
    Rational e = P.value_at(Rational(-1));
    if (e.is_zero()) throw std::domain_error("phi undefined: Euler characteristic is zero");
    return Rational(4) * P.derivative_at(2, Rational(-1)) / e - Rational(Integer(P.d) * Integer(P.d));
}

UniPoly log_expansion(const PoincarePoly& P, int order) {
    if (order < 0) throw std::domain_error("expansion order must be non-negative");
    Rational e = P.value_at(Rational(-1));
    if (e.is_zero())
        throw std::domain_error("log expansion undefined: Euler characteristic is zero");
    UniPoly shifted = P.poly().taylor_shift(Rational(-1));  // P(-1+t)
    UniPoly normalized = (Rational(1) / e) * shifted;
    UniPoly logpart = series_log1(normalized.truncated(order), order);
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    coeffs.push_back(e);
    for (int k = 1; k <= order; ++k) coeffs.push_back(logpart.coeff(k));
    return UniPoly::from_coeffs(coeffs);
}

PoincarePoly hodge_to_poincare(const HodgeDiamond& H) {
    std::vector<Integer> betti(static_cast<std::size_t>(2 * H.n) + 1, Integer(0));
    for (int p = 0; p <= H.n; ++p)
        for (int q = 0; q <= H.n; ++q) betti[static_cast<std::size_t>(p + q)] += H.at(p, q);
    bool connected = betti[0] >= 1;
    bool duality = true;
    for (int j = 0; 2 * j <= 2 * H.n; ++j)
        if (betti[static_cast<std::size_t>(j)] != betti[static_cast<std::size_t>(2 * H.n - j)])
            duality = false;
    return PoincarePoly::from_betti(2 * H.n, std::move(betti), connected, duality);
}

ChiPoly hodge_to_chi(const HodgeDiamond& H) {
    std::vector<Integer> chi(static_cast<std::size_t>(H.n) + 1, Integer(0));
    for (int p = 0; p <= H.n; ++p)
        for (int q = 0; q <= H.n; ++q)
            chi[static_cast<std::size_t>(p)] += (q % 2 == 0 ? H.at(p, q) : -H.at(p, q));
    return ChiPoly::from_coeffs(H.n, std::move(chi));
}

HodgeDiamond mirror(const HodgeDiamond& H) {
    std::vector<std::vector<Integer>> grid(static_cast<std::size_t>(H.n) + 1,
                                           std::vector<Integer>(static_cast<std::size_t>(H.n) + 1));
    for (int p = 0; p <= H.n; ++p)
        for (int q = 0; q <= H.n; ++q)
            grid[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = H.at(H.n - p, q);
    return HodgeDiamond::from_grid(H.n, std::move(grid));
}

Report phi_lemma_check(const HodgeDiamond& H) {
    if (auto cell = H.conjugation_violation())
        throw std::domain_error("conjugation symmetry fails at " +
                                cell_name("h", cell->first, cell->second));
    if (auto cell = H.serre_violation())
        throw std::domain_error("Serre duality fails at " +
                                cell_name("h", cell->first, cell->second));

    const int n = H.n;
    PoincarePoly P = hodge_to_poincare(H);
    ChiPoly chi = hodge_to_chi(H);

    Rational lhs = phi_cap(P);

    UniPoly chipoly = chi.poly();
    Rational base = Rational(2) * (Rational(6) * chipoly.derivative(2).eval(Rational(-1)) +
                                   Rational(Integer(n) * (5 - 3 * Integer(n)), Integer(2)) *
                                       chipoly.eval(Rational(-1)));
    Integer corr = 0;
    const int sign_n = (n % 2 == 0) ? 1 : -1;
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            Integer term = Integer(p) * Integer(q) * (H.at(p, q) - sign_n * H.at(n - p, q));
            corr += ((p + q) % 2 == 0 ? term : -term);
        }
    Rational rhs = base + Rational(6) * Rational(corr);

    Report report("Phi via Hodge numbers");
    std::ostringstream detail;
    detail << "Phi = " << lhs.str() << ", chi part " << base.str() << ", correction "
           << (Rational(6) * Rational(corr)).str()
           << " (uses h^{p,q} - (-1)^n h^{n-p,q})";
    report.check(lhs == rhs, "Phi decomposition in dimension n=" + std::to_string(n),
                 detail.str());
    return report;
}

Rational psi(const ChiPoly& chi) {
    Rational e(chi.euler());
    if (e.is_zero()) throw std::domain_error("psi undefined: chi(-1) is zero");
    Rational second = chi.poly().derivative(2).eval(Rational(-1));
    return Rational(4) * second / e - Rational(Integer(chi.n) * Integer(chi.n));
}

Report hk_report(const PoincarePoly& P) {
    if (P.d % 4 != 0) throw std::domain_error("hyper-Kaehler constraints require d = 4m");
    const int m = P.d / 4;
    Report report("hyper-Kaehler constraints (d = " + std::to_string(P.d) + ")");

    Rational phi = phi_cap(P);
    report.check(phi.is_zero(), "Phi vanishes", "Phi = " + phi.str());

    bool odd_ok = true;
    std::string violator;
    for (int j = 1; j <= P.d; j += 2)
        if (!divisible(P.b(j), 4)) {
            odd_ok = false;
            violator = "b_" + std::to_string(j) + " = " + P.b(j).get_str();
            break;
        }
    report.check(odd_ok, "odd Betti numbers divisible by 4",
                 odd_ok ? "all b_odd = 0 mod 4" : violator);

    Integer e = P.euler();
    Integer me = Integer(m) * e;
    report.check(divisible(me, 24), "m*e = 0 mod 24", "m*e = " + me.get_str());

    if (m % 8 != 0)
        report.check(divisible(e, 2), "e even (m != 0 mod 8)", "e = " + e.get_str());
    else
        report.pass("e parity unconstrained (m = 0 mod 8)", "e = " + e.get_str());
    return report;
}

Integer g2_quantity(const PoincarePoly& P) {
    if (P.d != 7) throw std::domain_error("this quantity is defined for 7-manifolds");
    P.check_duality();
    if (P.b(0) != 1) throw std::domain_error("connectedness fails: b_0 != 1");
    Rational value = P.derivative_at(1, Rational(-1));
    Integer result = value.to_integer();
    Integer closed = -P.b(3) + 3 * P.b(2) - 5 * P.b(1) + 7;
    if (result != closed)
        throw std::logic_error("P'(-1) disagrees with its closed form under duality");
    return result;
}

Report spin7_report(const PoincarePoly& P, const std::optional<Integer>& b4_minus,
                    const ChernNumbers* chern) {
    if (P.d != 8) throw std::domain_error("these constraints apply to 8-manifolds");
    Report report("dimension-8 holonomy constraints");

    Rational phi = phi_cap(P);
    report.check(phi.is_zero(), "Phi vanishes", "Phi = " + phi.str());

    if (b4_minus) {
        Integer expected = 3 * P.b(2) + 7;
        report.check(*b4_minus == expected, "b_4^- = 3 b_2 + 7",
                     "b_4^- = " + b4_minus->get_str() + ", 3 b_2 + 7 = " + expected.get_str());
    }

    if (chern != nullptr) {
        if (chern->n != 4)
            throw std::domain_error("Pontryagin comparison needs degree-4 Chern data");
        ChernPoly p1 = Rational(-2) * ChernPoly::ck(2);
        ChernPoly p2 = Rational(2) * ChernPoly::ck(4) + ChernPoly::ck(2) * ChernPoly::ck(2);
        ChernPoly quad = Rational(4) * p2 - p1 * p1;
        Rational lhs = pair(quad, *chern);
        Rational rhs = Rational(8) * Rational(chern->euler());
        report.check(lhs == rhs, "<4p_2 - p_1^2> = 8e",
                     "lhs = " + lhs.str() + ", 8e = " + rhs.str());
    }
    return report;
}

Rational qk_constraint(const QKBetti& beta) {
    Rational total(0);
    const int m = beta.m;
    for (int k = 1; k <= m; ++k) {
        Integer weight = Integer(k) * Integer(m + 1 - k) * Integer(m + 1 - 2 * k);
        total += Rational(weight * beta.beta2k(k));
    }
    return total;
}

}  // namespace chern
