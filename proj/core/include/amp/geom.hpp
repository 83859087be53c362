#pragma once

/**
 * @file geom.hpp
 * @brief Geometric vocabulary of the area method.
 *
 * Three quantity kinds are the polynomial indeterminates of every proof:
 * signed areas S_ABC, Pythagorean differences P_ABC = AB^2 + BC^2 - AC^2,
 * and directed segment ratios AB/CD (segments collinear or parallel).
 * Canonicalization implements S_ABC = S_CAB (A2), S_ABC = -S_BAC (A3),
 * the degenerate zeroes, and the P_ABC = P_CBA symmetry.
 */

#include "amp/expr_tree.hpp"
#include "amp/rational_expr.hpp"

#include <array>
#include <optional>
#include <vector>

namespace amp {

using GeoExpr = RationalExpr;

enum class QuantityKind { signed_area, pyth, ratio };

struct Quantity {
    QuantityKind kind;
    std::vector<std::string> pts;  // 3 points for S/P, 4 for ratio

    static Quantity area(std::string a, std::string b, std::string c);
    static Quantity pyth(std::string a, std::string b, std::string c);
    static Quantity ratio(std::string p, std::string q, std::string r, std::string s);

    /// Identifier used as a polynomial symbol, e.g. "S_ABC", "R_BDDA".
    std::string spelling() const;
    /// How the quantity is written in traces, e.g. "S_ABC", "BD/DA".
    std::string display() const;

    bool mentions(const std::string& point) const;

    friend bool operator==(const Quantity& a, const Quantity& b) {
        return a.kind == b.kind && a.pts == b.pts;
    }
};

struct CanonicalQuantity {
    std::optional<Quantity> q;  // empty iff the quantity is identically zero
    int sign = 0;               // +1, -1, or 0 (zero)
};

CanonicalQuantity canonicalize_quantity(const Quantity& q);

/// Registry of quantity atoms by spelling. Raw spellings produced by
/// elimination lemmas (e.g. S_BCA) are registered alongside canonical
/// ones so every proof line keeps an evaluable meaning.
class QuantityTable {
public:
    /// Register (idempotently) and return the spelling.
    std::string intern(const Quantity& q);

    /// Symbol leaf with the quantity's display form.
    ExprPtr leaf(const Quantity& q);

    /// sign * canonical-symbol as an expression (0 for degenerate atoms).
    RationalExpr canonical_expr(const Quantity& q);

    const Quantity* lookup(const std::string& spelling) const;

    /// Bindings mapping every registered non-canonical spelling among
    /// `symbols` to its canonical expression.
    std::map<std::string, RationalExpr> canonical_bindings(const std::set<std::string>& symbols) const;

private:
    std::map<std::string, Quantity> by_spelling_;
};

struct Statement {
    enum class Kind { equal, parallel, perpendicular, collinear };
    Kind kind;
    std::vector<std::string> pts;  // parallel/perpendicular: 4, collinear: 3
    ExprPtr lhs, rhs;              // equal goals (quantity-symbol leaves)
};

/// Translate a statement into the expression whose vanishing it asserts
/// (lhs - rhs), with raw (untouched) atom spellings.
GeoExpr translate_statement(const Statement& s, QuantityTable& table);

struct DegenerateBasis : std::runtime_error {
    DegenerateBasis() : std::runtime_error("basis triple is collinear or repeats a point") {}
};

/// A nondegeneracy requirement: `expr` must not vanish.
struct SideCondition {
    GeoExpr expr;
    std::string text;
};

struct BasisReduction {
    GeoExpr expr;
    std::vector<SideCondition> conds;
};

/// Rewrite quantities over free points in terms of an algebraically
/// independent generating set relative to the basis (O, U, V): per extra
/// point P the pair S_OUP, S_OVP, plus S_OUV, P_OUO and P_UOV for the
/// basis itself (OV^2 is eliminated through the Gram relation
/// 16*S_OUV^2 = P_OUO*P_OVO - P_UOV^2, which makes the set independent).
BasisReduction area_coordinate_reduce(const GeoExpr& e,
                                      const std::array<std::string, 3>& basis,
                                      QuantityTable& table);

}  // namespace amp
