#include "chern/symmetric.hpp"

#include <stdexcept>
#include <string>

namespace chern {

void check_dimension(int n) {
    if (n < 1 || n > kDimensionCeiling)
        throw SchemaError("dimension " + std::to_string(n) + " outside [1, " +
                          std::to_string(kDimensionCeiling) + "]");
}

MultiPoly elementary_in_roots(int n, int k) { return elementary_in_roots(n, k, n); }

MultiPoly elementary_in_roots(int n, int k, int bound) {
    if (k < 0 || k > n)
        throw std::domain_error("elementary_in_roots: index " + std::to_string(k) +
                                " outside [0, " + std::to_string(n) + "]");
    MultiPoly p(n, bound);
    // Iterate k-subsets of {0..n-1} via a simple odometer.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    while (true) {
        std::fill(exps.begin(), exps.end(), 0);
        for (int i : idx) exps[static_cast<std::size_t>(i)] = 1;
        p.add_term(exps, Rational(1));
        if (k == 0) break;
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i) - 1] + 1;
    }
    return p;
}

bool is_symmetric(const MultiPoly& p) {
    for (int i = 0; i + 1 < p.arity(); ++i)
        if (p.swapped(i, i + 1) != p) return false;
    return true;
}

ChernPoly reduce_to_elementary(const MultiPoly& p) {
    const int n = p.arity();
    for (const auto& [e, c] : p.terms())
        if (e.back() != 0)
            throw std::domain_error("reduce_to_elementary: input involves t");
    for (int i = 0; i + 1 < n; ++i)
        if (p.swapped(i, i + 1) != p)
            throw std::domain_error(
                "reduce_to_elementary: input not symmetric under swap of roots " +
                std::to_string(i + 1) + " and " + std::to_string(i + 2));

    ChernPoly result;
    MultiPoly work = p;
    bool have_prev = false;
    std::vector<int> prev;
    while (!work.is_zero()) {
        // Graded-lex greatest term; for symmetric input its exponent vector
        // is non-increasing across the root slots.
        const std::vector<int> lead = work.terms().rbegin()->first;
        const Rational coeff = work.terms().rbegin()->second;
        if (have_prev && !GradedLexLess{}(lead, prev))
            throw std::logic_error("reduce_to_elementary: leading term failed to descend");
        prev = lead;
        have_prev = true;

        std::vector<int> cexps(static_cast<std::size_t>(n), 0);
        MultiPoly image = MultiPoly::constant(n, p.root_bound(), Rational(1));
        for (int k = 1; k <= n; ++k) {
            const int mk = lead[static_cast<std::size_t>(k) - 1] -
                           (k < n ? lead[static_cast<std::size_t>(k)] : 0);
            if (mk < 0)
                throw std::logic_error("reduce_to_elementary: leading exponents not sorted");
            if (mk == 0) continue;
            cexps[static_cast<std::size_t>(k) - 1] = mk;
            const MultiPoly ek = elementary_in_roots(n, k, p.root_bound());
            for (int rep = 0; rep < mk; ++rep) image = image * ek;
        }
        result.add_term(std::move(cexps), coeff);
        work -= coeff * image;
    }
    return result;
}

ChernPoly newton_power_sum(int n, int k) {
    if (k < 1 || k > n)
        throw std::domain_error("newton_power_sum: index " + std::to_string(k) +
                                " outside [1, " + std::to_string(n) + "]");
    std::vector<ChernPoly> s(static_cast<std::size_t>(k) + 1);
    for (int m = 1; m <= k; ++m) {
        ChernPoly sm = Rational((m % 2 == 1) ? m : -m) * ChernPoly::ck(m);
        for (int i = 1; i < m; ++i) {
            const Rational sign((i % 2 == 1) ? 1 : -1);
            sm += sign * (ChernPoly::ck(i) * s[static_cast<std::size_t>(m - i)]);
        }
        s[static_cast<std::size_t>(m)] = sm;
    }
    return s[static_cast<std::size_t>(k)];
}

ChernPoly substitute(const ChernPoly& p, const std::map<int, ChernPoly>& assignments) {
    return p.substituted(assignments);
}

MultiPoly expand_in_chern_roots(const ChernPoly& q, int n) {
    MultiPoly r(n, n);
    for (const auto& [exps, c] : q.terms()) {
        if (static_cast<int>(exps.size()) > n)
            throw std::domain_error("expand_in_chern_roots: generator index exceeds root count");
        MultiPoly term = MultiPoly::constant(n, n, c);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const MultiPoly ek = elementary_in_roots(n, static_cast<int>(i) + 1, n);
            for (int rep = 0; rep < exps[i]; ++rep) term = term * ek;
        }
        r += term;
    }
    return r;
}

}  // namespace chern
