#include "chern/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace chern {

UniPoly UniPoly::monomial(const Rational& c, int k) {
    if (k < 0) throw std::domain_error("unipoly: negative degree");
    UniPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.coeffs_.back() = c;
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    UniPoly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

UniPoly UniPoly::truncated(int bound) const {
    if (bound < 0) return UniPoly();
    if (degree() <= bound) return *this;
    UniPoly r;
    r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + bound + 1);
    r.trim();
    return r;
}

UniPoly UniPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("unipoly: negative power");
    UniPoly r((Rational(1)));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::pow_trunc(long e, int bound) const {
    if (e < 0) throw std::domain_error("unipoly: negative power");
    UniPoly r((Rational(1)));
    UniPoly base = truncated(bound);
    while (e > 0) {
        if (e & 1) r = (r * base).truncated(bound);
        base = (base * base).truncated(bound);
        e >>= 1;
    }
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (coeffs_.size() <= 1) return r;
    r.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_[i - 1] = Rational(static_cast<long long>(i)) * coeffs_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::derivative(int order) const {
    UniPoly r = *this;
    for (int i = 0; i < order; ++i) r = r.derivative();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("unipoly: division by zero polynomial");
    UniPoly q, r = a;
    const int db = b.degree();
    const Rational& lead = b.coeffs_.back();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Rational c = r.coeffs_.back() / lead;
        q += monomial(c, shift);
        r -= monomial(c, shift) * b;
    }
    return {q, r};
}

int UniPoly::root_multiplicity(const Rational& r) const {
    if (is_zero()) throw std::domain_error("unipoly: root multiplicity of zero polynomial");
    UniPoly p = *this;
    const UniPoly lin = monomial(Rational(1), 1) - UniPoly(r);
    int mult = 0;
    while (p.eval(r).is_zero()) {
        auto [q, rem] = divmod(p, lin);
        if (!rem.is_zero()) throw std::logic_error("unipoly: inexact root division");
        p = q;
        ++mult;
    }
    return mult;
}

UniPoly UniPoly::taylor_shift(const Rational& a) const {
    // Horner on (x + a): result = (...(c_d (x+a) + c_{d-1})(x+a) + ...) + c_0
    UniPoly shift = monomial(Rational(1), 1) + UniPoly(a);
    UniPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * shift + UniPoly(*it);
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly series_invert(const UniPoly& p, int order) {
    if (p.coeff(0).is_zero()) throw std::domain_error("series_invert: zero constant term");
    if (order < 0) return UniPoly();
    UniPoly q(Rational(1) / p.coeff(0));
    int have = 0;  // exact modulo x^{have+1}
    const UniPoly two((Rational(2)));
    while (have < order) {
        have = std::min(2 * have + 1, order);
        q = (q * (two - (p.truncated(have) * q).truncated(have))).truncated(have);
    }
    return q;
}

UniPoly series_log1(const UniPoly& p, int order) {
    if (p.coeff(0) != Rational(1)) throw std::domain_error("series_log1: constant term must be 1");
    if (order <= 0) return UniPoly();
    const UniPoly num = p.derivative().truncated(order - 1);
    const UniPoly inv = series_invert(p, order - 1);
    const UniPoly ratio = (num * inv).truncated(order - 1);
    std::vector<Rational> cs(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int k = 0; k < order; ++k)
        cs[static_cast<std::size_t>(k) + 1] = ratio.coeff(k) / Rational(k + 1);
    return UniPoly::from_coeffs(std::move(cs));
}

}  // namespace chern
