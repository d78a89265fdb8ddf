#pragma once

#include <map>
#include <string>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Graded order on exponent vectors: total degree over all but the final
// (t) slot first, then plain lexicographic on the full vector.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (std::size_t i = 0; i + 1 < a.size(); ++i) da += a[i];
        for (std::size_t i = 0; i + 1 < b.size(); ++i) db += b[i];
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse polynomial in root generators x_1..x_arity plus a formal variable t.
// Exponent vectors have arity+1 slots, the last one for t. Terms whose total
// root degree exceeds the bound are dropped on every operation (truncation
// contract); the t-degree is capped at arity.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<int>, Rational, GradedLexLess>;

    MultiPoly(int arity, int root_bound);

    static MultiPoly constant(int arity, int root_bound, const Rational& c);
    static MultiPoly root(int arity, int root_bound, int i);  // x_{i+1}
    static MultiPoly t_var(int arity, int root_bound);

    int arity() const { return arity_; }
    int root_bound() const { return root_bound_; }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // exps has arity+1 slots; silently drops terms beyond the bounds.
    void add_term(const std::vector<int>& exps, const Rational& c);

    Rational coeff(const std::vector<int>& exps) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Terms with the given t-exponent, t slot reset to zero.
    MultiPoly t_coefficient(int k) const;

    // Terms of total root degree exactly w.
    MultiPoly homogeneous_part(int w) const;

    // Terms of total root degree in [lo, hi].
    MultiPoly degree_range(int lo, int hi) const;

    int max_root_degree() const;

    // Root slots i and j exchanged.
    MultiPoly swapped(int i, int j) const;

    std::string str() const;

    static long root_degree(const std::vector<int>& exps) {
        long d = 0;
        for (std::size_t i = 0; i + 1 < exps.size(); ++i) d += exps[i];
        return d;
    }

private:
    void check_compatible(const MultiPoly& o) const;

    int arity_;
    int root_bound_;
    TermMap terms_;
};

}  // namespace chern
