#pragma once

/**
 * @file dsl.hpp
 * @brief Parser and validator for the GCLC-style construction language.
 *
 * Grammar (EBNF):
 *   file    := step* goal
 *   step    := "point" ID NUM NUM | "line" ID ID ID | ("intersec"|"intersect") ID ID ID
 *            | "online" ID ID ID | "midpoint" ID ID ID | "parallel" ID ID ID
 *            | "towards" ID ID ID (NUM|ID) | "translate" ID ID ID ID
 *            | "foot" ID ID ID | "perp" ID ID ID
 *   goal    := ("prove"|"proof") "{" stmt "}"
 *   stmt    := "equal" "{" qty "}" "{" qty "}" | "parallel" ID ID ID ID
 *            | "perpendicular" ID ID ID ID | "collinear" ID ID ID
 *   qty     := "sratio" ID ID ID ID | "signed_area3" ID ID ID
 *            | "pythagoras_difference3" ID ID ID
 *   NUM     := integer | decimal | fraction "p/q"     (decimals read exactly)
 *
 * Comments run from '%' to end of line. Vertex arguments of a qty may be
 * concatenated ("signed_area3 DBC") when all point names are single
 * letters. The identifier alternative in "towards" carries a symbolic
 * ratio, which generalized scripts need to round-trip.
 */

#include "amp/geom.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace amp {

struct SyntaxError : std::runtime_error {
    SyntaxError(int line, const std::string& expected)
        : std::runtime_error("line " + std::to_string(line) + ": expected " + expected), line(line), expected(expected) {}
    int line;
    std::string expected;
};

struct UseBeforeDefinition : std::runtime_error {
    UseBeforeDefinition(int line, const std::string& name)
        : std::runtime_error("line " + std::to_string(line) + ": '" + name + "' used before definition"), name(name) {}
    std::string name;
};

struct Redefinition : std::runtime_error {
    Redefinition(int line, const std::string& name)
        : std::runtime_error("line " + std::to_string(line) + ": '" + name + "' redefined"), name(name) {}
    std::string name;
};

struct ArityError : std::runtime_error {
    ArityError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what) {}
};

struct NotGeneralizable : std::runtime_error {
    explicit NotGeneralizable(size_t step)
        : std::runtime_error("step " + std::to_string(step) + " is not a towards step with a numeric ratio"),
          step(step) {}
    size_t step;
};

struct ConstructionStep {
    enum class Kind {
        free_point,     // point NAME x y
        line_def,       // line NAME P Q
        intersect,      // intersec NAME l1 l2
        on_line,        // online NAME P Q          (fresh parameter t_NAME)
        midpoint,       // midpoint NAME P Q
        parallel_line,  // parallel NAME P l        (line through P parallel to l)
        towards,        // towards NAME P Q r       (NAME = P + r * PQ)
        translate,      // translate NAME P Q R     (NAME = R + (Q - P))
        foot,           // foot NAME P l            (foot of perpendicular from P onto l)
        perp_line,      // perp NAME P l            (line through P perpendicular to l)
    };

    Kind kind;
    std::string name;
    std::vector<std::string> args;
    Rational hint_x, hint_y;          // free_point
    std::optional<Rational> ratio;    // towards, numeric form
    std::string ratio_symbol;         // towards, symbolic form (exclusive with ratio)
    int line = 0;

    bool defines_point() const {
        return kind != Kind::line_def && kind != Kind::parallel_line && kind != Kind::perp_line;
    }
};

struct Script {
    std::vector<ConstructionStep> steps;
    Statement goal;
    std::vector<Quantity> goal_atoms;  // quantity leaves of an `equal` goal
    std::set<std::string> params;      // on_line parameters and symbolic ratios

    const ConstructionStep* find(const std::string& name) const;
    bool is_point(const std::string& name) const;
    bool is_line(const std::string& name) const;
    std::vector<std::string> free_points() const;
    /// Non-free points in construction order.
    std::vector<std::string> constructed_points() const;
};

/// Name of the fresh parameter introduced by `online NAME P Q`.
std::string online_param_name(const std::string& point);

Script parse_script(std::string_view source);

std::string pretty_print(const Script& script);

/// Replace numeric towards-ratios by symbolic parameters. Equal numeric
/// values share one symbol (changing 0.3 to r must change every 0.3).
/// `which` = nullptr generalizes every towards step; explicit indices
/// must point at towards steps with numeric ratios.
Script generalize(const Script& script, const std::vector<size_t>* which = nullptr);

}  // namespace amp
