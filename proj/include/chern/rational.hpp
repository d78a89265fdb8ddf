#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace chern {

using Integer = mpz_class;

// Input/format problems (bad JSON, unknown monomial keys, out-of-range CLI
// arguments). Everything else throws std::domain_error or friends.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar. Always reduced, denominator positive, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(long long num, long long den)
        : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with optional leading '-'.
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
            throw SchemaError("rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::domain_error("rational: zero denominator in '" + s + "'");
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Value as an Integer; throws unless is_integer().
    Integer to_integer() const {
        if (!is_integer()) throw std::domain_error("rational: " + str() + " is not an integer");
        return v_.get_num();
    }

    Rational operator-() const { Rational r; r.v_ = -v_; return r; }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    Rational pow(long e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("rational: zero to negative power");
            Rational inv(den(), num());
            return inv.pow(-e);
        }
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    // "p" or "p/q"
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

inline Integer binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(long long n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace chern
