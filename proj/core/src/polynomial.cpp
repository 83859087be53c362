#include "amp/polynomial.hpp"

#include <algorithm>

namespace amp {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    if (ia != a.end()) return false;
    if (ib != b.end()) return true;
    int da = 0, db = 0;
    for (const auto& [s, e] : a) da += e;
    for (const auto& [s, e] : b) db += e;
    return da < db;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_[Monomial{}] = c;
    return p;
}

Polynomial Polynomial::symbol(const std::string& name) {
    Polynomial p;
    p.terms_[Monomial{{name, 1}}] = Rational(1);
    return p;
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [s, e] : m) t += e;
        d = std::max(d, t);
    }
    return d;
}

std::set<std::string> Polynomial::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m) out.insert(s);
    return out;
}

int Polynomial::leading_sign() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second.sign();
}

Rational Polynomial::content() const {
    if (terms_.empty()) return Rational(0);
    BigInt gn = 0, ld = 1;
    for (const auto& [m, c] : terms_) {
        gn = boost::multiprecision::gcd(gn, boost::multiprecision::abs(c.num()));
        ld = ld / boost::multiprecision::gcd(ld, c.den()) * c.den();
    }
    return Rational(gn, ld);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [s, e] : mb) m[s] += e;
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& bindings) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [s, e] : m) {
            auto it = bindings.find(s);
            if (it == bindings.end()) throw UnboundSymbol(s);
            for (int i = 0; i < e; ++i) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

}  // namespace amp
