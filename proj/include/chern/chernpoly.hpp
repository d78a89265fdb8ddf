#pragma once

#include <map>
#include <string>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

inline long chern_weight(const std::vector<int>& exps) {
    long w = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) w += static_cast<long>(i + 1) * exps[i];
    return w;
}

// Order Chern monomials by weight ascending, then lexicographically
// descending on the (zero-padded) exponent vectors. Within a weight this
// puts c1-heavy monomials first, matching the customary way the expansions
// are written (c1*c5 before c6).
struct WeightLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        const long wa = chern_weight(a), wb = chern_weight(b);
        if (wa != wb) return wa < wb;
        const std::size_t len = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < len; ++i) {
            const int av = i < a.size() ? a[i] : 0;
            const int bv = i < b.size() ? b[i] : 0;
            if (av != bv) return av > bv;
        }
        return false;
    }
};

// Polynomial in the formal generators c_1, c_2, ... graded by weight
// (wt c_k = k). Keys are exponent vectors (e_1,...) with trailing zeros
// trimmed; the empty key is the constant monomial.
class ChernPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, WeightLexLess>;

    ChernPoly() = default;

    static ChernPoly constant(const Rational& c);
    static ChernPoly ck(int k);  // c_k for k >= 1; k = 0 yields the constant 1
    static ChernPoly monomial(std::vector<int> exps, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(std::vector<int> exps) const;

    void add_term(std::vector<int> exps, const Rational& c);

    ChernPoly operator-() const;
    ChernPoly& operator+=(const ChernPoly& o);
    ChernPoly& operator-=(const ChernPoly& o);
    friend ChernPoly operator+(ChernPoly a, const ChernPoly& b) { return a += b; }
    friend ChernPoly operator-(ChernPoly a, const ChernPoly& b) { return a -= b; }
    friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b);
    friend ChernPoly operator*(const Rational& s, const ChernPoly& p);

    friend bool operator==(const ChernPoly& a, const ChernPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ChernPoly& a, const ChernPoly& b) { return !(a == b); }

    ChernPoly pow(long e) const;

    long max_weight() const;  // 0 for the zero polynomial
    ChernPoly weight_part(long w) const;
    ChernPoly weight_range(long lo, long hi) const;
    bool is_homogeneous(long w) const;

    // Exact substitution c_k -> assignments[k] for the listed indices;
    // unlisted generators are left alone.
    ChernPoly substituted(const std::map<int, ChernPoly>& assignments) const;

    // Canonical rendering: terms in map order, " + "/" - " separators,
    // coefficient 1 omitted, integer coefficients as "k*", fractions as
    // "(p/q)*"; monomials like "c1^2*c3".
    std::string str() const;
    std::string latex() const;

    static std::string monomial_key(const std::vector<int>& exps);
    // Strict inverse of monomial_key: factors in ascending index order,
    // '^' only for exponents > 1. Throws SchemaError otherwise.
    static std::vector<int> parse_monomial_key(const std::string& key);

private:
    static void trim(std::vector<int>& exps) {
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
    }

    TermMap terms_;
};

// Human-readable description of where two expansions differ (empty if equal).
std::string diff_monomials(const ChernPoly& a, const ChernPoly& b);

}  // namespace chern
