#pragma once

/**
 * @file oracle.hpp
 * @brief Exact rational-coordinate model of the area method.
 *
 * Constructions are evaluated in coordinates with exact rationals; every
 * axiom A1-A13, every elimination lemma and every proof step can be
 * cross-checked against this model. Prover and oracle never share a code
 * path: the prover is symbolic, the oracle is numeric.
 */

#include "amp/dsl.hpp"
#include "amp/geom.hpp"

#include <cstdint>
#include <random>

namespace amp {

struct DegenerateAfterRetries : std::runtime_error {
    explicit DegenerateAfterRetries(const std::string& what)
        : std::runtime_error("degenerate configuration after retries: " + what) {}
};

struct NonParallelRatio : std::runtime_error {
    NonParallelRatio() : std::runtime_error("sratio segments are not parallel in this configuration") {}
};

struct ZeroLengthRatioBase : std::runtime_error {
    ZeroLengthRatioBase() : std::runtime_error("sratio base segment has zero length") {}
};

struct AxiomViolation : std::runtime_error {
    AxiomViolation(int index, const std::string& witness)
        : std::runtime_error("axiom A" + std::to_string(index) + " violated: " + witness), index(index) {}
    int index;
};

struct Coord {
    Rational x, y;
    friend bool operator==(const Coord& a, const Coord& b) { return a.x == b.x && a.y == b.y; }
};

struct Configuration {
    std::map<std::string, Coord> coords;
    std::map<std::string, Rational> params;
};

/// Deterministic bounded random draws (independent of the standard
/// library's distribution implementations, so a seed is reproducible).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi);  // inclusive
    /// num in [-max_num, max_num], den in [1, max_den].
    Rational rational(std::int64_t max_num, std::int64_t max_den);
    /// Default grid for point coordinates: |num| <= 10^6, den <= 10^3.
    Rational coordinate();
    /// Nonzero value on a smaller grid, for parameters.
    Rational parameter();

private:
    std::mt19937_64 eng_;
};

enum class InstantiateMode { hints, random };

/// Coordinates for every point of the script, exactly as constructed.
/// Free points take their hints (mode hints) or random rationals; symbolic
/// parameters are sampled either way. Degenerate draws are retried up to
/// 100 times.
Configuration instantiate(const Script& script, std::uint64_t seed, InstantiateMode mode);

Rational eval_quantity(const Quantity& q, const Configuration& cfg);

/// Evaluate a GeoExpr by binding quantity symbols through eval_quantity
/// and parameter symbols through cfg.params.
Rational eval_expr(const GeoExpr& e, const Configuration& cfg, const QuantityTable& table);

bool check_statement(const Statement& s, const Configuration& cfg, QuantityTable& table);

struct AxiomReport {
    int axiom = 0;
    int seeds = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

AxiomReport validate_axiom(int index, int seed_count, std::uint64_t seed = 0);

std::string axiom_report_json(const AxiomReport& report);

}  // namespace amp
