#pragma once

#include <string>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Dense univariate polynomial over Rational. Invariant: no trailing zero
// coefficient; the zero polynomial is the empty list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }

    static UniPoly variable() { return monomial(Rational(1), 1); }

    static UniPoly monomial(const Rational& c, int k);

    static UniPoly from_coeffs(std::vector<Rational> cs) {
        UniPoly p;
        p.coeffs_ = std::move(cs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Drops every term of degree > bound.
    UniPoly truncated(int bound) const;

    UniPoly pow(long e) const;
    UniPoly pow_trunc(long e, int bound) const;

    Rational eval(const Rational& x) const;  // Horner
    UniPoly derivative() const;
    UniPoly derivative(int order) const;

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    // Multiplicity of the root x = r (0 if p(r) != 0); zero polynomial -> error.
    int root_multiplicity(const Rational& r) const;

    UniPoly taylor_shift(const Rational& a) const;  // p(x + a)

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

// q with p*q = 1 modulo x^{order+1}; requires p(0) != 0. Newton iteration.
UniPoly series_invert(const UniPoly& p, int order);

// log p modulo x^{order+1} for p with p(0) = 1, via integrating p'/p.
UniPoly series_log1(const UniPoly& p, int order);

}  // namespace chern
