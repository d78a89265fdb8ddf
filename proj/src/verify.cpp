#include "chern/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chern/charclass.hpp"
#include "chern/chern_numbers.hpp"
#include "chern/chernpoly.hpp"
#include "chern/hilbert.hpp"
#include "chern/invariants.hpp"
#include "chern/json_io.hpp"
#include "chern/manifolds.hpp"
#include "chern/moduli.hpp"
#include "chern/multipoly.hpp"
#include "chern/rational.hpp"
#include "chern/symmetric.hpp"
#include "chern/unipoly.hpp"

namespace chern {
namespace {

std::string istr(const Integer& v) { return v.get_str(); }

std::string betti_str(const std::vector<Integer>& b) {
    std::string s = "(";
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (j) s += ",";
        s += b[j].get_str();
    }
    return s + ")";
}

// Re-emit a sub-report's lines with a context prefix, so merged suites stay
// readable when the same checker runs on several inputs.
void merge_prefixed(Report& into, const Report& sub, const std::string& prefix) {
    for (const auto& line : sub.lines)
        into.lines.push_back({prefix + ": " + line.name, line.status, line.detail});
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random Betti vector satisfying Poincare duality in real dimension d.
PoincarePoly random_duality_poincare(std::mt19937_64& rng, int d) {
    std::vector<Integer> b(static_cast<std::size_t>(d) + 1, Integer(0));
    for (int j = 0; 2 * j <= d; ++j) {
        const Integer v(rand_int(rng, 0, 9));
        b[static_cast<std::size_t>(j)] = v;
        b[static_cast<std::size_t>(d - j)] = v;
    }
    const bool connected = b[0] >= 1;
    return PoincarePoly::from_betti(d, std::move(b), connected, true);
}

// Random Hodge diamond with conjugation symmetry and Serre duality, filled
// one symmetry orbit at a time; with mirror_too the mirror map joins the
// orbit group, producing a mirror-invariant diamond.
HodgeDiamond random_diamond(std::mt19937_64& rng, int n, bool mirror_too) {
    std::vector<std::vector<Integer>> h(static_cast<std::size_t>(n) + 1,
                                        std::vector<Integer>(static_cast<std::size_t>(n) + 1,
                                                             Integer(0)));
    std::vector<std::vector<bool>> done(static_cast<std::size_t>(n) + 1,
                                        std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (done[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) continue;
            const Integer v(rand_int(rng, 0, 6));
            std::vector<std::pair<int, int>> stack{{p, q}};
            while (!stack.empty()) {
                const auto [a, b] = stack.back();
                stack.pop_back();
                if (done[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) continue;
                done[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
                h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
                stack.push_back({b, a});
                stack.push_back({n - a, n - b});
                if (mirror_too) stack.push_back({n - a, b});
            }
        }
    return HodgeDiamond::from_grid(n, std::move(h));
}

// 6 chi''(-1) + (n(5-3n)/2) chi(-1), the chi-side bracket of the Phi lemma.
Rational chi_cap(const ChiPoly& chi) {
    const UniPoly c = chi.poly();
    return Rational(6) * c.derivative(2).eval(Rational(-1)) +
           Rational(Integer(chi.n) * (5 - 3 * Integer(chi.n)), Integer(2)) * c.eval(Rational(-1));
}

// ---------------------------------------------------------------------------
// lemmas: K-class closed forms, support bounds, odd-order elimination,
// alternating Chern-character sums, Todd spot values.
// ---------------------------------------------------------------------------

Report lemmas_suite(const VerifyOptions& opt) {
    Report rep("lemma suite: characteristic-class identities");
    const int n_max = std::clamp(opt.n_max, 1, kDimensionCeiling);

    for (int n = 1; n <= n_max; ++n) {
        const std::string ns = std::to_string(n);
        rep.check(kclass(n, 0) == ChernPoly::ck(n), "K(" + ns + ",0) = c_" + ns);
        rep.check(kclass(n, 1) == Rational(n, 2) * ChernPoly::ck(n),
                  "K(" + ns + ",1) = (" + ns + "/2) c_" + ns);
    }

    for (int n = 2; n <= n_max; ++n) rep.merge(verify_kclass_lemmas(n));

    for (int n = 1; n <= n_max; ++n) {
        int bad_k = 0;
        for (int k = 1; k <= n; ++k)
            if (!verify_ideal_membership(n, k)) {
                bad_k = k;
                break;
            }
        rep.check(bad_k == 0,
                  "dimension-forced support bound holds for K(n,k), 1 <= k <= n (n=" +
                      std::to_string(n) + ")",
                  bad_k == 0 ? "every monomial meets c_{n-2*floor((k+1)/2)+1}..c_n"
                             : "fails at k=" + std::to_string(bad_k));
    }

    for (int n = 2; n <= n_max; ++n)
        for (int k = 0; 2 * k + 1 <= n; ++k) {
            const int order = 2 * k + 1;
            bool ok = true;
            std::string note;
            try {
                const std::vector<Rational> a = odd_order_combination(n, k);
                note = "coefficients on K(n,0),K(n,2),...: [";
                for (std::size_t j = 0; j < a.size(); ++j) {
                    if (j) note += ", ";
                    note += a[j].str();
                }
                note += "]";
            } catch (const std::exception& ex) {
                ok = false;
                note = ex.what();
            }
            rep.check(ok,
                      "K(" + std::to_string(n) + "," + std::to_string(order) +
                          ") is a rational combination of lower even orders",
                      note);
        }

    // The alternating sum over exterior powers of the cotangent bundle,
    // evaluated against the Todd class, collapses to the top Chern class:
    // prod (1 - e^{-x_i}) * prod x_i/(1 - e^{-x_i}) = x_1...x_n exactly.
    for (int n = 1; n <= n_max; ++n) {
        MultiPoly prod = MultiPoly::constant(n, n, Rational(1));
        for (int i = 0; i < n; ++i) {
            MultiPoly factor(n, n);
            Rational kfact(1);
            std::vector<int> e(static_cast<std::size_t>(n) + 1, 0);
            for (int k = 1; k <= n; ++k) {
                kfact /= Rational(k);
                e[static_cast<std::size_t>(i)] = k;
                factor.add_term(e, (k % 2 == 1) ? kfact : -kfact);
            }
            prod = prod * factor;
        }
        const ChernPoly lhs = (reduce_to_elementary(prod) * todd_class(n)).weight_part(n);
        rep.check(lhs == ChernPoly::ck(n),
                  "alternating Chern-character sum collapses to c_n at t=-1 (n=" +
                      std::to_string(n) + ")");
    }
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
        const ChernPoly td = todd_class(n);
        ChernPoly total;
        for (int p = 0; p <= n; ++p) {
            const ChernPoly term = (lambda_chern_character(n, p) * td).weight_part(n);
            total = (p % 2 == 0) ? total + term : total - term;
        }
        rep.check(total == ChernPoly::ck(n),
                  "sum_p (-1)^p ch(Lambda^p T*) . td has weight-n part c_n (n=" +
                      std::to_string(n) + ")",
                  total.str());
    }

    {
        const ChernPoly td2 =
            Rational(1, 12) * (ChernPoly::ck(1) * ChernPoly::ck(1) + ChernPoly::ck(2));
        rep.check(todd_class(2).weight_part(2) == td2, "Todd weight-2 term is (c1^2 + c2)/12");
        const ChernPoly td3 = Rational(1, 24) * (ChernPoly::ck(1) * ChernPoly::ck(2));
        rep.check(todd_class(3).weight_part(3) == td3, "Todd weight-3 term is c1*c2/24",
                  todd_class(3).weight_part(3).str());
        rep.warn("Todd weight-3 transcription note",
                 "a circulated transcription reads the weight-3 term as c1*c3/24, which is not "
                 "weight-homogeneous; the expansion gives c1*c2/24 and that form is used "
                 "throughout");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// theorems: derivative identities, concrete Chern-number generators,
// two-route chi computations, Betti-vector algebra, the Hodge lemma, and
// mirror behavior.
// ---------------------------------------------------------------------------

Report theorems_suite(const VerifyOptions& opt) {
    Report rep("theorem suite: derivative identities and Betti/Hodge algebra");
    const int n_max = std::clamp(opt.n_max, 2, kDimensionCeiling);
    std::mt19937_64 rng(opt.seed);

    for (int n = 2; n <= n_max; ++n) rep.merge(second_derivative_identity(n));
    for (int n = 4; n <= n_max; ++n) rep.merge(fourth_derivative_identity(n));

    {
        const std::map<int, ChernPoly> kill_c1 = {{1, ChernPoly()}};
        const ChernPoly top = substitute(todd_class(4).weight_part(4), kill_c1);
        const ChernPoly want =
            Rational(1, 720) *
            (Rational(3) * (ChernPoly::ck(2) * ChernPoly::ck(2)) - ChernPoly::ck(4));
        rep.check(top == want, "top Todd class at c1=0, n=4 equals (3c2^2 - c4)/720", top.str());
    }

    {
        std::vector<std::pair<std::string, ChernNumbers>> zoo;
        for (int n = 1; n <= std::min(n_max, 6); ++n)
            zoo.emplace_back("CP^" + std::to_string(n), cp_chern(n));
        zoo.emplace_back("quartic surface in CP^3", complete_intersection_chern(3, {4}));
        zoo.emplace_back("quintic threefold in CP^4", complete_intersection_chern(4, {5}));
        zoo.emplace_back("(2,2) threefold in CP^5", complete_intersection_chern(5, {2, 2}));
        zoo.emplace_back("sextic fourfold in CP^5", complete_intersection_chern(5, {6}));
        zoo.emplace_back("CP^2 x CP^2", product_chern(cp_chern(2), cp_chern(2)));
        zoo.emplace_back("CP^1 x CP^3", product_chern(cp_chern(1), cp_chern(3)));
        for (const auto& [name, data] : zoo) merge_prefixed(rep, theorem_checks(data), name);
    }

    // chi^p two ways: Riemann-Roch from Chern numbers against the Hodge
    // diamond, on spaces where both are classical.
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
        std::vector<std::vector<Integer>> h(static_cast<std::size_t>(n) + 1,
                                            std::vector<Integer>(static_cast<std::size_t>(n) + 1,
                                                                 Integer(0)));
        for (int p = 0; p <= n; ++p) h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = 1;
        const ChiPoly via_hodge = hodge_to_chi(HodgeDiamond::from_grid(n, std::move(h)));
        const ChiPoly via_chern = chi_from_chern(cp_chern(n));
        rep.check(via_hodge.chi == via_chern.chi,
                  "chi^p of CP^" + std::to_string(n) + " agrees between Hodge and Chern routes");
    }
    {
        const HodgeDiamond k3 =
            HodgeDiamond::from_grid(2, {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}});
        const ChiPoly via_chern = chi_from_chern(complete_intersection_chern(3, {4}));
        rep.check(hodge_to_chi(k3).chi == via_chern.chi && via_chern.chi == std::vector<Integer>({2, -20, 2}),
                  "chi^p of the quartic K3 is (2,-20,2) by both routes");
    }
    {
        const HodgeDiamond quintic = HodgeDiamond::from_grid(
            3, {{1, 0, 0, 1}, {0, 1, 101, 0}, {0, 101, 1, 0}, {1, 0, 0, 1}});
        const ChiPoly via_chern = chi_from_chern(complete_intersection_chern(4, {5}));
        rep.check(hodge_to_chi(quintic).chi == via_chern.chi &&
                      via_chern.chi == std::vector<Integer>({0, 100, -100, 0}),
                  "chi^p of the quintic threefold is (0,100,-100,0) by both routes");
    }
    {
        std::vector<std::vector<Integer>> h(5, std::vector<Integer>(5, Integer(0)));
        const int diag[5] = {1, 2, 3, 2, 1};
        for (int p = 0; p <= 4; ++p) h[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)] = diag[p];
        const ChiPoly via_hodge = hodge_to_chi(HodgeDiamond::from_grid(4, std::move(h)));
        const ChiPoly via_chern = chi_from_chern(product_chern(cp_chern(2), cp_chern(2)));
        rep.check(via_hodge.chi == via_chern.chi,
                  "chi^p of CP^2 x CP^2 agrees between Hodge and Chern routes");
    }

    {
        rep.check(gamma(cp_chern(1)) == Rational(1), "gamma(CP^1) = 1",
                  gamma(cp_chern(1)).str());
        rep.check(gamma(cp_chern(2)) == Rational(3), "gamma(CP^2) = 3",
                  gamma(cp_chern(2)).str());
        rep.check(gamma(product_chern(cp_chern(2), cp_chern(2))) == Rational(6),
                  "gamma(CP^2 x CP^2) = 6");
        rep.check(gamma(complete_intersection_chern(3, {4})).is_zero(), "gamma(quartic K3) = 0");
        bool ok = true;
        std::string bad;
        for (int a = 1; a <= 5 && ok; ++a)
            for (int b = a; a + b <= 6 && ok; ++b) {
                const Rational lhs = gamma(product_chern(cp_chern(a), cp_chern(b)));
                const Rational rhs = gamma(cp_chern(a)) + gamma(cp_chern(b));
                if (lhs != rhs) {
                    ok = false;
                    bad = "CP^" + std::to_string(a) + " x CP^" + std::to_string(b) + ": " +
                          lhs.str() + " vs " + rhs.str();
                }
            }
        rep.check(ok, "gamma is additive on CP^a x CP^b for a+b <= 6", bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (int a = 1; a <= 3 && ok; ++a)
            for (int b = a; a + b <= 4 && ok; ++b) {
                const ChiPoly A = chi_from_chern(cp_chern(a));
                const ChiPoly B = chi_from_chern(cp_chern(b));
                const ChiPoly AB = chi_from_chern(product_chern(cp_chern(a), cp_chern(b)));
                if (psi(AB) != psi(A) + psi(B)) {
                    ok = false;
                    bad = "CP^" + std::to_string(a) + " x CP^" + std::to_string(b);
                }
            }
        rep.check(ok, "psi is additive on CP^a x CP^b for a+b <= 4", bad);
    }

    {
        const auto rhs4 = [](const std::vector<Integer>& b) -> Integer {
            return Integer(22) * b[0] - Integer(4) * b[1] - b[2];
        };
        bool ok = true;
        std::string bad;
        const std::vector<std::vector<Integer>> basis4 = {
            {1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 0}};
        for (const auto& b : basis4) {
            const PoincarePoly P = PoincarePoly::from_betti(4, b, false, true);
            if (phi_cap(P) != Rational(Integer(2) * rhs4(b))) {
                ok = false;
                bad = betti_str(b);
            }
        }
        for (int i = 0; i < opt.trials && ok; ++i) {
            const PoincarePoly P = random_duality_poincare(rng, 4);
            if (phi_cap(P) != Rational(Integer(2) * rhs4(P.betti))) {
                ok = false;
                bad = betti_str(P.betti);
            }
        }
        rep.check(ok,
                  "d=4: Phi = 2(22 b0 - 4 b1 - b2) on the duality basis and " +
                      std::to_string(opt.trials) + " random vectors",
                  bad);
    }
    {
        const auto rhs8 = [](const std::vector<Integer>& b) -> Integer {
            return Integer(46) * b[0] - Integer(25) * b[1] + Integer(10) * b[2] - b[3] - b[4];
        };
        bool ok = true;
        std::string bad;
        std::vector<std::vector<Integer>> basis8;
        for (int j = 0; j <= 4; ++j) {
            std::vector<Integer> b(9, Integer(0));
            b[static_cast<std::size_t>(j)] = 1;
            b[static_cast<std::size_t>(8 - j)] = 1;
            basis8.push_back(std::move(b));
        }
        for (const auto& b : basis8) {
            const PoincarePoly P = PoincarePoly::from_betti(8, b, false, true);
            if (phi_cap(P) != Rational(Integer(4) * rhs8(b))) {
                ok = false;
                bad = betti_str(b);
            }
        }
        for (int i = 0; i < opt.trials && ok; ++i) {
            const PoincarePoly P = random_duality_poincare(rng, 8);
            if (phi_cap(P) != Rational(Integer(4) * rhs8(P.betti))) {
                ok = false;
                bad = betti_str(P.betti);
            }
        }
        rep.check(ok,
                  "d=8: Phi = 4(46 b0 - 25 b1 + 10 b2 - b3 - b4) on the duality basis and " +
                      std::to_string(opt.trials) + " random vectors",
                  bad);
    }

    {
        bool ok = true;
        std::string bad;
        for (int i = 0; i < opt.trials && ok; ++i) {
            const int d = 2 * rand_int(rng, 1, 5);
            const PoincarePoly P = random_duality_poincare(rng, d);
            const Rational lhs = Rational(2) * P.derivative_at(1, Rational(-1));
            const Rational rhs = Rational(-d) * P.value_at(Rational(-1));
            if (lhs != rhs) {
                ok = false;
                bad = "d=" + std::to_string(d) + ", betti " + betti_str(P.betti);
            }
        }
        rep.check(ok,
                  "2P'(-1) = -d P(-1) under duality, even d, " + std::to_string(opt.trials) +
                      " random instances",
                  bad);
        rep.pass("derivative identity scoped to even d",
                 "in d=3 the duality vector (1,2,2,1) has 2P'(-1) = 2 but -d P(-1) = 0");
    }

    {
        bool ok = true;
        std::string bad;
        for (int i = 0; i < opt.trials && ok; ++i) {
            const int d = 4 * rand_int(rng, 1, 3);
            const PoincarePoly P = random_duality_poincare(rng, d);
            const auto [lhs, rhs] = fo_form(P);
            const Rational phi = phi_cap(P);
            if (phi != Rational(2) * Rational(rhs - lhs) || phi.is_zero() != (lhs == rhs)) {
                ok = false;
                bad = "d=" + std::to_string(d) + ", betti " + betti_str(P.betti);
            }
        }
        rep.check(ok,
                  "Phi = 2(rhs - lhs) of the fourth-order form, hence Phi = 0 iff it balances (" +
                      std::to_string(opt.trials) + " random instances, d in {4,8,12})",
                  bad);

        bool zeros_ok = true;
        const std::vector<std::pair<std::string, PoincarePoly>> hk = {
            {"K3", PoincarePoly::from_betti(4, {1, 0, 22, 0, 1}, true, true)},
            {"T^4", PoincarePoly::from_betti(4, {1, 4, 6, 4, 1}, true, true)},
            {"K3^[2]", hilb_poincare(SurfaceBetti::k3(), 2)}};
        std::string zbad;
        for (const auto& [name, P] : hk) {
            const auto [lhs, rhs] = fo_form(P);
            if (!phi_cap(P).is_zero() || lhs != rhs) {
                zeros_ok = false;
                zbad = name;
            }
        }
        rep.check(zeros_ok, "Phi = 0 side witnessed: K3, T^4, K3^[2] all balance the form", zbad);
    }

    for (const int n : {2, 3, 4, 6}) {
        int failures = 0;
        std::string first;
        for (int i = 0; i < opt.trials; ++i) {
            const HodgeDiamond H = random_diamond(rng, n, false);
            const Report sub = phi_lemma_check(H);
            if (!sub.ok()) {
                ++failures;
                if (first.empty() && !sub.lines.empty()) first = sub.lines.front().detail;
            }
        }
        rep.check(failures == 0,
                  "Phi lemma holds on " + std::to_string(opt.trials) +
                      " random Hodge diamonds (n=" + std::to_string(n) + ")",
                  first);
    }

    for (const int n : {2, 3, 4, 6}) {
        int bad_inv = 0, bad_rev = 0, bad_euler = 0;
        for (int i = 0; i < opt.trials; ++i) {
            const HodgeDiamond H = random_diamond(rng, n, false);
            const HodgeDiamond M = mirror(H);
            if (mirror(M).h != H.h) ++bad_inv;
            const ChiPoly cH = hodge_to_chi(H);
            const ChiPoly cM = hodge_to_chi(M);
            for (int p = 0; p <= n; ++p)
                if (cM.at(p) != cH.at(n - p)) {
                    ++bad_rev;
                    break;
                }
            const Integer eH = H.euler();
            if (M.euler() != ((n % 2 == 0) ? eH : -eH)) ++bad_euler;
        }
        rep.check(bad_inv == 0, "mirror map is an involution (n=" + std::to_string(n) + ")");
        rep.check(bad_rev == 0,
                  "chi of the mirror reverses coefficients (n=" + std::to_string(n) + ")");
        rep.check(bad_euler == 0,
                  "e(mirror) = (-1)^n e (n=" + std::to_string(n) + ")");
    }

    for (const int n : {2, 4, 6}) {
        bool ok = true;
        std::string bad;
        for (int i = 0; i < opt.trials && ok; ++i) {
            const HodgeDiamond H = random_diamond(rng, n, false);
            const Rational lhs =
                phi_cap(hodge_to_poincare(H)) + phi_cap(hodge_to_poincare(mirror(H)));
            if (lhs != Rational(4) * chi_cap(hodge_to_chi(H))) {
                ok = false;
                bad = "trial " + std::to_string(i);
            }
        }
        rep.check(ok,
                  "Phi(H) + Phi(mirror H) = 4[6chi''(-1) + (n(5-3n)/2)chi(-1)] (n=" +
                      std::to_string(n) + ", even)",
                  bad);
    }

    for (const int n : {2, 4, 6}) {
        bool ok = true;
        std::string bad;
        for (int i = 0; i < opt.trials && ok; ++i) {
            const HodgeDiamond H = random_diamond(rng, n, true);
            if (H.mirror_violation()) {
                ok = false;
                bad = "construction failed to be mirror-invariant";
                break;
            }
            if (phi_cap(hodge_to_poincare(H)) != Rational(2) * chi_cap(hodge_to_chi(H))) {
                ok = false;
                bad = "trial " + std::to_string(i);
            }
        }
        rep.check(ok,
                  "mirror-invariant diamonds: Phi = 2[6chi''(-1) + (n(5-3n)/2)chi(-1)] (n=" +
                      std::to_string(n) + ", even)",
                  bad);
    }

    {
        bool ok = true;
        std::string bad;
        const std::vector<std::pair<std::string, PoincarePoly>> flat = {
            {"K3", PoincarePoly::from_betti(4, {1, 0, 22, 0, 1}, true, true)},
            {"K3^[2]", hilb_poincare(SurfaceBetti::k3(), 2)},
            {"K3^[3]", hilb_poincare(SurfaceBetti::k3(), 3)}};
        for (const auto& [name, P] : flat) {
            if (!phi_cap(P).is_zero() || phi_small(P) != Rational(-5 * P.d, 3)) {
                ok = false;
                bad = name + ": phi = " + phi_small(P).str();
            }
        }
        rep.check(ok, "phi = -5d/3 on Phi = 0 examples (K3, K3^[2], K3^[3])", bad);
    }

    return rep;
}

// ---------------------------------------------------------------------------
// hilbert: symmetric products, punctual Hilbert schemes, Kummer fixtures.
// ---------------------------------------------------------------------------

Report hilbert_suite(const VerifyOptions& opt) {
    Report rep("hilbert suite: symmetric products and punctual Hilbert schemes");
    const int m_cap = std::clamp(opt.m_max, 1, kSymmetricOrderCap);
    const SurfaceBetti k3 = SurfaceBetti::k3();
    const SurfaceBetti cp2 = SurfaceBetti::cp2();
    const SurfaceBetti t4 = SurfaceBetti::torus();

    rep.check(partitions(0).size() == 1, "p(0) = 1 (the empty partition)");
    rep.check(partitions(8).size() == 22, "partition count p(8) = 22");

    {
        const PoincarePoly s2 = sym_product_poincare(k3, 2);
        rep.check(s2.betti == std::vector<Integer>({1, 0, 22, 0, 254, 0, 22, 0, 1}),
                  "P(K3 symmetric square) = (1,0,22,0,254,0,22,0,1)", betti_str(s2.betti));
    }
    {
        bool ok = true;
        std::string bad;
        for (const auto* S : {&k3, &cp2})
            for (int m = 1; m <= std::min(m_cap, 6) && ok; ++m) {
                const Integer e = sym_product_poincare(*S, m).euler();
                const Integer want = binomial(S->euler().get_si() + m - 1, m);
                if (e != want) {
                    ok = false;
                    bad = "m=" + std::to_string(m) + ": " + istr(e) + " vs " + istr(want);
                }
            }
        rep.check(ok, "e(S^(m)) = C(e(S)+m-1, m) for S in {K3, CP^2}, m <= 6", bad);
    }

    {
        const PoincarePoly h2 = hilb_poincare(k3, 2);
        rep.check(h2.betti == std::vector<Integer>({1, 0, 23, 0, 276, 0, 23, 0, 1}),
                  "P(K3^[2]) = (1,0,23,0,276,0,23,0,1)", betti_str(h2.betti));
        rep.check(h2.euler() == 324, "e(K3^[2]) = 324", istr(h2.euler()));
    }
    {
        const Integer e8 = hilb_euler(k3, 8);
        rep.check(e8 == 30178575, "e(K3^[8]) = 30178575", istr(e8));
        rep.check(mpz_odd_p(e8.get_mpz_t()) != 0, "e(K3^[8]) is odd");
    }

    {
        bool ok = true;
        std::string bad;
        const std::vector<std::pair<std::string, const SurfaceBetti*>> surfaces = {
            {"K3", &k3}, {"CP^2", &cp2}, {"T^4", &t4}};
        for (const auto& [name, S] : surfaces)
            for (int m = 1; m <= std::min(m_cap, 10) && ok; ++m) {
                if (hilb_poincare(*S, m).euler() != hilb_euler(*S, m)) {
                    ok = false;
                    bad = name + ", m=" + std::to_string(m);
                }
            }
        rep.check(ok, "P(S^[m])(-1) matches the Euler product for K3, CP^2, T^4, m <= 10", bad);
    }

    merge_prefixed(rep, phi_additivity_check(k3, std::min(m_cap, 6)), "K3");
    merge_prefixed(rep, phi_additivity_check(cp2, std::min(m_cap, 6)), "CP^2");

    {
        bool rejected = false;
        std::string what;
        try {
            phi_additivity_check(t4, 2);
        } catch (const std::domain_error& ex) {
            rejected = true;
            what = ex.what();
        }
        rep.check(rejected, "phi additivity rejects the torus (e = 0)", what);
    }

    rep.warn("Hilbert-scheme exponent convention",
             "the shift in the Hilbert-scheme sum is read as t^{2(m - number of parts)}; a "
             "plausible alternative reading (largest part in place of the part count) fails the "
             "K3 order-2 fixture, so the part-count form is used");

    rep.merge(kummer_fixture_check(opt.fixture_dir));
    return rep;
}

// ---------------------------------------------------------------------------
// moduli: rank-2 odd-degree bundle moduli over genus-g curves.
// ---------------------------------------------------------------------------

Report moduli_suite(const VerifyOptions& opt) {
    Report rep("moduli suite: rank-2 odd-degree bundles over genus-g curves");
    const int g_max = std::max(opt.g_max, 2);
    for (int g = 2; g <= g_max; ++g)
        merge_prefixed(rep, mg_report(g), "g=" + std::to_string(g));

    rep.warn("vanishing order of P(M_g) at t = -1",
             "a circulated reading puts the order at 2g-1; the computed multiplicity is exactly "
             "2g-2 for every genus checked, and that exact value is what the report asserts");

    {
        const ChiPoly chi3 = mg_chi(3);
        const UniPoly shifted = chi3.poly().taylor_shift(Rational(-1));
        const UniPoly want = UniPoly::from_coeffs({Rational(0), Rational(0), Rational(0),
                                                   Rational(0), Rational(4), Rational(-4),
                                                   Rational(1)});
        rep.check(shifted == want, "g=3: chi(-1+t) = 4t^4 - 4t^5 + t^6", shifted.str());
        rep.check(shifted.coeff(4) == Rational(4) && shifted.coeff(5) == Rational(-4) &&
                      shifted.coeff(6) == Rational(1),
                  "g=3: shifted coefficients reconstruct (a,b,c) = (4,-4,1)");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// holonomy: G2 and Spin(7) Betti screens, quaternion-Kaehler balance,
// hyper-Kaehler necessary conditions.
// ---------------------------------------------------------------------------

Report holonomy_suite(const VerifyOptions& opt) {
    Report rep("holonomy suite: exceptional holonomy and quaternionic checks");

    {
        const G2Fixture g2 = load_g2_fixture(opt.fixture_dir);
        int idx = 0;
        for (const auto& betti : g2.examples) {
            ++idx;
            const std::string tag = "G2 example " + std::to_string(idx);
            const PoincarePoly P = PoincarePoly::from_betti(7, betti, true, true);
            const Integer q = g2_quantity(P);
            rep.check(q == 0, tag + ": P'(-1) = 0",
                      "betti " + betti_str(betti) + ", value " + istr(q));
            std::vector<Integer> sm = betti;
            sm[2] += 1;
            sm[3] += 3;
            sm[4] += 3;
            sm[5] += 1;
            const Integer q2 = g2_quantity(PoincarePoly::from_betti(7, sm, true, true));
            rep.check(q2 == q, tag + ": quantity invariant under (b2,b3) -> (b2+1,b3+3)",
                      "value stays " + istr(q2));
        }
    }

    {
        const Spin7Fixture s7 = load_spin7_fixture(opt.fixture_dir);
        const ChernNumbers sextic = complete_intersection_chern(5, {6});
        merge_prefixed(rep, spin7_report(s7.P, s7.b4_minus, &sextic), "Spin(7)");
    }

    {
        const QKFixtureSet qk = load_qk_fixture(opt.fixture_dir);
        for (const auto& [name, beta] : qk.fixtures) {
            const Rational v = qk_constraint(beta);
            rep.check(v.is_zero(),
                      "quaternion-Kaehler balance (m=" + std::to_string(qk.m) + "): " + name,
                      "weighted sum = " + v.str());
        }
    }

    {
        const KummerFixture kf = load_kummer_fixture(opt.fixture_dir);
        merge_prefixed(rep, hk_report(PoincarePoly::from_betti(8, kf.k2_betti, true, true)),
                       "K_2");
        merge_prefixed(rep, hk_report(PoincarePoly::from_betti(4, {1, 0, 22, 0, 1}, true, true)),
                       "K3");
        merge_prefixed(rep, hk_report(PoincarePoly::from_betti(4, {1, 4, 6, 4, 1}, true, true)),
                       "T^4");
        merge_prefixed(rep, hk_report(hilb_poincare(SurfaceBetti::k3(), 2)), "K3^[2]");
        const Report neg = hk_report(PoincarePoly::from_betti(4, {1, 0, 1, 0, 1}, true, true));
        rep.check(!neg.ok(), "hyper-Kaehler screen rejects (1,0,1,0,1)",
                  "Phi is nonzero there");
    }

    return rep;
}

}  // namespace

Report verify_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "lemmas") return lemmas_suite(opt);
    if (name == "theorems") return theorems_suite(opt);
    if (name == "hilbert") return hilbert_suite(opt);
    if (name == "moduli") return moduli_suite(opt);
    if (name == "holonomy") return holonomy_suite(opt);
    if (name == "all") {
        Report rep("full verification");
        rep.merge(lemmas_suite(opt));
        rep.merge(theorems_suite(opt));
        rep.merge(hilbert_suite(opt));
        rep.merge(moduli_suite(opt));
        rep.merge(holonomy_suite(opt));
        return rep;
    }
    throw SchemaError("unknown suite '" + name +
                      "' (expected lemmas, theorems, hilbert, moduli, holonomy, or all)");
}

}  // namespace chern
