#pragma once

/**
 * @file rational_expr.hpp
 * @brief Quotients of canonical polynomials — the universal symbolic value.
 *
 * Equality is decided by the cross-multiplied zero test; no multivariate
 * gcd is ever computed. Normalization divides both parts by the
 * denominator's content and makes its leading coefficient positive, which
 * keeps serialization deterministic and growth bounded.
 */

#include "amp/polynomial.hpp"

#include <map>
#include <string>

namespace amp {

struct DivisionByZeroExpr : std::runtime_error {
    DivisionByZeroExpr() : std::runtime_error("division by syntactically zero expression") {}
};

enum class ArithKind { add, sub, mul, div, neg };

class RationalExpr {
public:
    RationalExpr() : num_(), den_(Polynomial::constant(Rational(1))) {}
    static RationalExpr constant(const Rational& c);
    static RationalExpr symbol(const std::string& name);
    static RationalExpr from_poly(Polynomial p);
    RationalExpr(Polynomial num, Polynomial den);  // throws DivisionByZeroExpr on zero den

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    friend RationalExpr operator+(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator-(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator*(const RationalExpr& a, const RationalExpr& b);
    friend RationalExpr operator/(const RationalExpr& a, const RationalExpr& b);
    RationalExpr operator-() const;

    /// Simultaneous substitution of symbols by expressions, then canonicalization.
    RationalExpr substitute(const std::map<std::string, RationalExpr>& bindings) const;

    Rational evaluate(const std::map<std::string, Rational>& bindings) const;

    std::set<std::string> symbols() const;

    /// Canonical fully-parenthesized infix text, e.g. "( 7/10 * S_ABC )".
    std::string to_string() const;
    static RationalExpr parse(std::string_view text);

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

RationalExpr arith(const RationalExpr& lhs, const RationalExpr& rhs, ArithKind kind);

/// true iff lhs.num * rhs.den - rhs.num * lhs.den canonicalizes to zero.
bool expr_equal(const RationalExpr& lhs, const RationalExpr& rhs);

}  // namespace amp
