#pragma once

/**
 * @file polynomial.hpp
 * @brief Canonical sparse multivariate polynomials over Rational.
 *
 * A monomial maps symbol names to positive exponents; a polynomial maps
 * monomials to nonzero coefficients. Two polynomials are equal iff their
 * canonical forms are identical. The monomial order is lexicographic on
 * the (symbol, exponent) sequence, with total degree as a tie-break —
 * any fixed order would do, determinism is what matters.
 */

#include "amp/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace amp {

struct UnboundSymbol : std::runtime_error {
    explicit UnboundSymbol(const std::string& sym) : std::runtime_error("unbound symbol: " + sym), symbol(sym) {}
    std::string symbol;
};

using Monomial = std::map<std::string, int>;  // symbol -> exponent (> 0)

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    Polynomial() = default;
    static Polynomial constant(const Rational& c);
    static Polynomial symbol(const std::string& name);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    Rational constant_value() const;  // requires is_constant()

    const TermMap& terms() const { return terms_; }
    int total_degree() const;
    std::set<std::string> symbols() const;

    /// Sign of the coefficient of the greatest monomial; 0 for the zero polynomial.
    int leading_sign() const;

    /// Positive gcd of |coefficients| (gcd of numerators over lcm of denominators);
    /// 0 for the zero polynomial.
    Rational content() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Rational evaluate(const std::map<std::string, Rational>& bindings) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

}  // namespace amp
