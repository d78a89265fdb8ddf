#include "chern/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace chern {

MultiPoly::MultiPoly(int arity, int root_bound) : arity_(arity), root_bound_(root_bound) {
    if (arity < 0 || root_bound < 0) throw std::domain_error("multipoly: negative arity or bound");
}

MultiPoly MultiPoly::constant(int arity, int root_bound, const Rational& c) {
    MultiPoly p(arity, root_bound);
    p.add_term(std::vector<int>(static_cast<std::size_t>(arity) + 1, 0), c);
    return p;
}

MultiPoly MultiPoly::root(int arity, int root_bound, int i) {
    if (i < 0 || i >= arity) throw std::domain_error("multipoly: root index out of range");
    MultiPoly p(arity, root_bound);
    std::vector<int> e(static_cast<std::size_t>(arity) + 1, 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::t_var(int arity, int root_bound) {
    MultiPoly p(arity, root_bound);
    std::vector<int> e(static_cast<std::size_t>(arity) + 1, 0);
    e.back() = 1;
    p.add_term(e, Rational(1));
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (exps.size() != static_cast<std::size_t>(arity_) + 1)
        throw std::domain_error("multipoly: exponent vector has wrong arity");
    for (int e : exps)
        if (e < 0) throw std::domain_error("multipoly: negative exponent");
    if (c.is_zero()) return;
    if (root_degree(exps) > root_bound_ || exps.back() > arity_) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::domain_error("multipoly: arity mismatch");
    if (root_bound_ != o.root_bound_) throw std::domain_error("multipoly: truncation bound mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.arity_, a.root_bound_);
    const std::size_t slots = static_cast<std::size_t>(a.arity_) + 1;
    std::vector<int> e(slots);
    for (const auto& [ea, ca] : a.terms_) {
        const long da = MultiPoly::root_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + MultiPoly::root_degree(eb) > a.root_bound_) continue;
            if (ea.back() + eb.back() > a.arity_) continue;
            for (std::size_t i = 0; i < slots; ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) {
                r.terms_.emplace(e, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly r(p.arity_, p.root_bound_);
    if (s.is_zero()) return r;
    r.terms_ = p.terms_;
    for (auto& [e, c] : r.terms_) c *= s;
    return r;
}

MultiPoly MultiPoly::t_coefficient(int k) const {
    MultiPoly r(arity_, root_bound_);
    for (const auto& [e, c] : terms_) {
        if (e.back() != k) continue;
        std::vector<int> e2 = e;
        e2.back() = 0;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

MultiPoly MultiPoly::homogeneous_part(int w) const { return degree_range(w, w); }

MultiPoly MultiPoly::degree_range(int lo, int hi) const {
    MultiPoly r(arity_, root_bound_);
    for (const auto& [e, c] : terms_) {
        const long d = root_degree(e);
        if (d >= lo && d <= hi) r.terms_.emplace(e, c);
    }
    return r;
}

int MultiPoly::max_root_degree() const {
    int best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(root_degree(e)));
    return best;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
    if (i < 0 || j < 0 || i >= arity_ || j >= arity_)
        throw std::domain_error("multipoly: swap index out of range");
    MultiPoly r(arity_, root_bound_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> e2 = e;
        std::swap(e2[static_cast<std::size_t>(i)], e2[static_cast<std::size_t>(j)]);
        r.add_term(e2, c);
    }
    return r;
}

std::string MultiPoly::str() const {
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
        bool any = false;
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            mono << "x" << (i + 1);
            if (e[i] > 1) mono << "^" << e[i];
            any = true;
        }
        if (e.back() > 0) {
            if (any) mono << "*";
            mono << "t";
            if (e.back() > 1) mono << "^" << e.back();
            any = true;
        }
        if (!any) {
            os << a.str();
        } else {
            if (a != Rational(1)) os << (a.is_integer() ? a.str() : "(" + a.str() + ")") << "*";
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace chern
