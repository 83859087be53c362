#pragma once

/**
 * @file expr_tree.hpp
 * @brief Display-form expression trees and the text syntax.
 *
 * The prover renders proof lines in the fully parenthesized style of GCLC
 * traces, e.g. "( S_BCA + ( 3/10 * ( 0 + ( -1 * S_BCA))))". A tree keeps
 * the written shape (which a canonical RationalExpr would instantly
 * simplify away); its semantic value is recovered with to_rational_expr.
 */

#include "amp/rational_expr.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace amp {

struct ExprParseError : std::runtime_error {
    explicit ExprParseError(const std::string& what) : std::runtime_error("expression syntax: " + what) {}
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { number, symbol, add, sub, mul, div, pow, neg };

    Kind kind;
    Rational value;        // number
    std::string name;      // symbol key used in polynomials
    std::string display;   // how the symbol is written (defaults to name)
    ExprPtr lhs, rhs;      // binary / neg (lhs only)
    int exponent = 0;      // pow

    static ExprPtr number(Rational v);
    static ExprPtr symbol(std::string name, std::string display = "");
    static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
    static ExprPtr add(ExprPtr l, ExprPtr r) { return binary(Kind::add, std::move(l), std::move(r)); }
    static ExprPtr sub(ExprPtr l, ExprPtr r) { return binary(Kind::sub, std::move(l), std::move(r)); }
    static ExprPtr mul(ExprPtr l, ExprPtr r) { return binary(Kind::mul, std::move(l), std::move(r)); }
    static ExprPtr div(ExprPtr l, ExprPtr r) { return binary(Kind::div, std::move(l), std::move(r)); }
    static ExprPtr neg(ExprPtr x);
    static ExprPtr pow(ExprPtr base, int e);
};

std::string to_text(const ExprPtr& e);
RationalExpr to_rational_expr(const ExprPtr& e);

/// Canonical display tree of a RationalExpr (deterministic term order).
ExprPtr tree_of(const RationalExpr& e);

/// Replace symbol leaves by subtrees (by symbol key); leaves without a
/// binding are kept.
ExprPtr tree_substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& bindings);

bool tree_mentions(const ExprPtr& e, const std::string& symbol_key);

/// Parse the text syntax: + - * / ^ with parentheses, exact numeric
/// literals (integer, decimal, fraction) and identifiers.
ExprPtr parse_tree(std::string_view text);

inline RationalExpr parse_expr(std::string_view text) { return to_rational_expr(parse_tree(text)); }

}  // namespace amp
