#include "amp/rational_expr.hpp"

namespace amp {

RationalExpr RationalExpr::constant(const Rational& c) {
    RationalExpr e;
    e.num_ = Polynomial::constant(c);
    return e;
}

RationalExpr RationalExpr::symbol(const std::string& name) {
    RationalExpr e;
    e.num_ = Polynomial::symbol(name);
    return e;
}

RationalExpr RationalExpr::from_poly(Polynomial p) {
    RationalExpr e;
    e.num_ = std::move(p);
    return e;
}

RationalExpr::RationalExpr(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroExpr();
    normalize();
}

void RationalExpr::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::constant(Rational(1));
        return;
    }
    Rational c = den_.content();
    if (den_.leading_sign() < 0) c = -c;
    if (!(c == Rational(1))) {
        Rational inv = c.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    if (num_ == den_) {  // cheap syntactic cancellation
        num_ = Polynomial::constant(Rational(1));
        den_ = Polynomial::constant(Rational(1));
    }
}

RationalExpr operator+(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator-(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalExpr operator*(const RationalExpr& a, const RationalExpr& b) {
    return RationalExpr(a.num_ * b.num_, a.den_ * b.den_);
}

RationalExpr operator/(const RationalExpr& a, const RationalExpr& b) {
    if (b.num_.is_zero()) throw DivisionByZeroExpr();
    return RationalExpr(a.num_ * b.den_, a.den_ * b.num_);
}

RationalExpr RationalExpr::operator-() const {
    RationalExpr e;
    e.num_ = -num_;
    e.den_ = den_;
    return e;
}

RationalExpr arith(const RationalExpr& lhs, const RationalExpr& rhs, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return lhs + rhs;
        case ArithKind::sub: return lhs - rhs;
        case ArithKind::mul: return lhs * rhs;
        case ArithKind::div: return lhs / rhs;
        case ArithKind::neg: return -lhs;
    }
    throw std::logic_error("unreachable arith kind");
}

bool expr_equal(const RationalExpr& lhs, const RationalExpr& rhs) {
    return (lhs.num() * rhs.den() - rhs.num() * lhs.den()).is_zero();
}

namespace {

RationalExpr substitute_poly(const Polynomial& p, const std::map<std::string, RationalExpr>& bindings) {
    RationalExpr acc;
    for (const auto& [mono, coef] : p.terms()) {
        RationalExpr term = RationalExpr::constant(coef);
        for (const auto& [sym, exp] : mono) {
            auto it = bindings.find(sym);
            RationalExpr base = it != bindings.end() ? it->second : RationalExpr::symbol(sym);
            for (int i = 0; i < exp; ++i) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

RationalExpr RationalExpr::substitute(const std::map<std::string, RationalExpr>& bindings) const {
    RationalExpr n = substitute_poly(num_, bindings);
    RationalExpr d = substitute_poly(den_, bindings);
    if (d.is_zero()) throw DivisionByZeroExpr();
    return n / d;
}

Rational RationalExpr::evaluate(const std::map<std::string, Rational>& bindings) const {
    Rational d = den_.evaluate(bindings);
    if (d.is_zero()) throw DivisionByZeroValue();
    return num_.evaluate(bindings) / d;
}

std::set<std::string> RationalExpr::symbols() const {
    std::set<std::string> out = num_.symbols();
    auto d = den_.symbols();
    out.insert(d.begin(), d.end());
    return out;
}

}  // namespace amp
