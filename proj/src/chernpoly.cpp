#include "chern/chernpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace chern {

ChernPoly ChernPoly::constant(const Rational& c) {
    ChernPoly p;
    p.add_term({}, c);
    return p;
}

ChernPoly ChernPoly::ck(int k) {
    if (k < 0) throw std::domain_error("chernpoly: negative class index");
    if (k == 0) return constant(Rational(1));
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    e.back() = 1;
    return monomial(std::move(e), Rational(1));
}

ChernPoly ChernPoly::monomial(std::vector<int> exps, const Rational& c) {
    ChernPoly p;
    p.add_term(std::move(exps), c);
    return p;
}

Rational ChernPoly::coeff(std::vector<int> exps) const {
    trim(exps);
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChernPoly::add_term(std::vector<int> exps, const Rational& c) {
    for (int e : exps)
        if (e < 0) throw std::domain_error("chernpoly: negative exponent");
    if (c.is_zero()) return;
    trim(exps);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ChernPoly ChernPoly::operator-() const {
    ChernPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ChernPoly& ChernPoly::operator-=(const ChernPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ChernPoly operator*(const ChernPoly& a, const ChernPoly& b) {
    ChernPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

ChernPoly operator*(const Rational& s, const ChernPoly& p) {
    ChernPoly r;
    if (s.is_zero()) return r;
    r.terms_ = p.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

ChernPoly ChernPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("chernpoly: negative power");
    ChernPoly r = constant(Rational(1));
    ChernPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

long ChernPoly::max_weight() const {
    long best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, chern_weight(e));
    return best;
}

ChernPoly ChernPoly::weight_part(long w) const { return weight_range(w, w); }

ChernPoly ChernPoly::weight_range(long lo, long hi) const {
    ChernPoly r;
    for (const auto& [e, c] : terms_) {
        const long w = chern_weight(e);
        if (w >= lo && w <= hi) r.terms_.emplace(e, c);
    }
    return r;
}

bool ChernPoly::is_homogeneous(long w) const {
    for (const auto& [e, c] : terms_)
        if (chern_weight(e) != w) return false;
    return true;
}

ChernPoly ChernPoly::substituted(const std::map<int, ChernPoly>& assignments) const {
    ChernPoly r;
    for (const auto& [e, c] : terms_) {
        ChernPoly term = constant(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const int k = static_cast<int>(i) + 1;
            auto it = assignments.find(k);
            const ChernPoly factor = (it == assignments.end()) ? ck(k) : it->second;
            term = term * factor.pow(e[i]);
        }
        r += term;
    }
    return r;
}

std::string ChernPoly::monomial_key(const std::vector<int>& exps) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (any) os << "*";
        os << "c" << (i + 1);
        if (exps[i] > 1) os << "^" << exps[i];
        any = true;
    }
    return any ? os.str() : "1";
}

std::vector<int> ChernPoly::parse_monomial_key(const std::string& key) {
    const auto fail = [&key]() -> void {
        throw SchemaError("malformed Chern monomial key '" + key + "'");
    };
    if (key == "1") return {};
    std::vector<int> exps;
    std::size_t pos = 0;
    int last_index = 0;
    while (pos < key.size()) {
        if (key[pos] != 'c') fail();
        ++pos;
        std::size_t start = pos;
        while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
        if (start == pos) fail();
        const int idx = std::stoi(key.substr(start, pos - start));
        if (idx <= last_index) fail();  // ascending, no repeats
        int exp = 1;
        if (pos < key.size() && key[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos]))) ++pos;
            if (start == pos) fail();
            exp = std::stoi(key.substr(start, pos - start));
            if (exp < 2) fail();  // exponent 1 is written without '^'
        }
        if (pos < key.size()) {
            if (key[pos] != '*') fail();
            ++pos;
            if (pos == key.size()) fail();
        }
        exps.resize(static_cast<std::size_t>(idx), 0);
        exps[static_cast<std::size_t>(idx) - 1] = exp;
        last_index = idx;
    }
    if (exps.empty()) fail();
    return exps;
}

std::string ChernPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (e.empty()) {
            os << a.str();
            continue;
        }
        if (a != Rational(1)) os << (a.is_integer() ? a.str() : "(" + a.str() + ")") << "*";
        os << monomial_key(e);
    }
    return os.str();
}

std::string ChernPoly::latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const std::size_t idx = i + 1;
            mono << "c_";
            if (idx > 9) mono << "{" << idx << "}";
            else mono << idx;
            if (e[i] > 1) {
                mono << "^";
                if (e[i] > 9) mono << "{" << e[i] << "}";
                else mono << e[i];
            }
        }
        const std::string m = mono.str();
        if (m.empty()) {
            if (a.is_integer()) os << a.str();
            else os << "\\frac{" << a.num().get_str() << "}{" << a.den().get_str() << "}";
            continue;
        }
        if (a != Rational(1)) {
            if (a.is_integer()) os << a.str();
            else os << "\\frac{" << a.num().get_str() << "}{" << a.den().get_str() << "}";
        }
        os << m;
    }
    return os.str();
}

std::string diff_monomials(const ChernPoly& a, const ChernPoly& b) {
    const ChernPoly d = a - b;
    if (d.is_zero()) return "";
    std::ostringstream os;
    os << "differs by " << d.str();
    return os.str();
}

}  // namespace chern
