#include "amp/oracle.hpp"

#include <nlohmann/json.hpp>

namespace amp {

std::int64_t Rng::int_in(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

Rational Rng::rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(BigInt(int_in(-max_num, max_num)), BigInt(int_in(1, max_den)));
}

Rational Rng::coordinate() { return rational(1000000, 1000); }

Rational Rng::parameter() {
    Rational r;
    do {
        r = rational(50, 20);
    } while (r.is_zero());
    return r;
}

namespace {

Coord operator+(const Coord& a, const Coord& b) { return {a.x + b.x, a.y + b.y}; }
Coord operator-(const Coord& a, const Coord& b) { return {a.x - b.x, a.y - b.y}; }
Coord operator*(const Rational& s, const Coord& v) { return {s * v.x, s * v.y}; }

Rational cross(const Coord& u, const Coord& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Coord& u, const Coord& v) { return u.x * v.x + u.y * v.y; }
Coord perp(const Coord& v) { return {-v.y, v.x}; }
Rational dist2(const Coord& a, const Coord& b) { return dot(b - a, b - a); }

struct LineCoords {
    Coord anchor;
    Coord dir;
};

struct Degenerate {};  // local resampling signal

struct Evaluator {
    const Script& script;
    Configuration& cfg;

    const Coord& point(const std::string& name) const { return cfg.coords.at(name); }

    LineCoords line(const std::string& name) const {
        const ConstructionStep* s = script.find(name);
        if (!s) throw std::logic_error("unknown line " + name);
        switch (s->kind) {
            case ConstructionStep::Kind::line_def: {
                Coord p = point(s->args[0]), q = point(s->args[1]);
                if (p == q) throw Degenerate{};
                return {p, q - p};
            }
            case ConstructionStep::Kind::parallel_line:
                return {point(s->args[0]), line(s->args[1]).dir};
            case ConstructionStep::Kind::perp_line:
                return {point(s->args[0]), perp(line(s->args[1]).dir)};
            default:
                throw std::logic_error(name + " does not name a line");
        }
    }

    void run() {
        using K = ConstructionStep::Kind;
        for (const auto& s : script.steps) {
            switch (s.kind) {
                case K::free_point:
                case K::line_def:
                case K::parallel_line:
                case K::perp_line:
                    break;  // free points are pre-seeded; lines are resolved on demand
                case K::midpoint: {
                    Coord p = point(s.args[0]), q = point(s.args[1]);
                    cfg.coords[s.name] = Rational(1, 2) * (p + q);
                    break;
                }
                case K::towards: {
                    Coord p = point(s.args[0]), q = point(s.args[1]);
                    Rational r = s.ratio ? *s.ratio : cfg.params.at(s.ratio_symbol);
                    cfg.coords[s.name] = p + r * (q - p);
                    break;
                }
                case K::on_line: {
                    Coord p = point(s.args[0]), q = point(s.args[1]);
                    Rational t = cfg.params.at(online_param_name(s.name));
                    cfg.coords[s.name] = p + t * (q - p);
                    break;
                }
                case K::translate: {
                    Coord p = point(s.args[0]), q = point(s.args[1]), r = point(s.args[2]);
                    cfg.coords[s.name] = r + (q - p);
                    break;
                }
                case K::intersect: {
                    LineCoords l1 = line(s.args[0]), l2 = line(s.args[1]);
                    Rational d = cross(l1.dir, l2.dir);
                    if (d.is_zero()) throw Degenerate{};
                    Rational t = cross(l2.anchor - l1.anchor, l2.dir) / d;
                    cfg.coords[s.name] = l1.anchor + t * l1.dir;
                    break;
                }
                case K::foot: {
                    Coord p = point(s.args[0]);
                    LineCoords l = line(s.args[1]);
                    Rational dd = dot(l.dir, l.dir);
                    if (dd.is_zero()) throw Degenerate{};
                    Rational t = dot(p - l.anchor, l.dir) / dd;
                    cfg.coords[s.name] = l.anchor + t * l.dir;
                    break;
                }
            }
        }
    }
};

}  // namespace

Configuration instantiate(const Script& script, std::uint64_t seed, InstantiateMode mode) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Configuration cfg;
        for (const auto& s : script.steps) {
            if (s.kind != ConstructionStep::Kind::free_point) continue;
            if (mode == InstantiateMode::hints) {
                cfg.coords[s.name] = {s.hint_x, s.hint_y};
            } else {
                cfg.coords[s.name] = {rng.coordinate(), rng.coordinate()};
            }
        }
        for (const auto& p : script.params) cfg.params[p] = rng.parameter();
        try {
            Evaluator{script, cfg}.run();
            return cfg;
        } catch (const Degenerate&) {
            continue;
        }
    }
    throw DegenerateAfterRetries("script constructions stay degenerate for seed " + std::to_string(seed));
}

Rational eval_quantity(const Quantity& q, const Configuration& cfg) {
    auto at = [&](size_t i) -> const Coord& { return cfg.coords.at(q.pts[i]); };
    switch (q.kind) {
        case QuantityKind::signed_area: {
            const Coord &a = at(0), &b = at(1), &c = at(2);
            return cross(b - a, c - a) / Rational(2);
        }
        case QuantityKind::pyth: {
            const Coord &a = at(0), &b = at(1), &c = at(2);
            return dist2(a, b) + dist2(b, c) - dist2(a, c);
        }
        case QuantityKind::ratio: {
            Coord u = at(1) - at(0), v = at(3) - at(2);
            if (v.x.is_zero() && v.y.is_zero()) throw ZeroLengthRatioBase();
            if (!cross(u, v).is_zero()) throw NonParallelRatio();
            return v.x.is_zero() ? u.y / v.y : u.x / v.x;
        }
    }
    throw std::logic_error("unreachable quantity kind");
}

Rational eval_expr(const GeoExpr& e, const Configuration& cfg, const QuantityTable& table) {
    std::map<std::string, Rational> bindings;
    for (const auto& sym : e.symbols()) {
        if (const Quantity* q = table.lookup(sym)) {
            bindings[sym] = eval_quantity(*q, cfg);
        } else if (auto it = cfg.params.find(sym); it != cfg.params.end()) {
            bindings[sym] = it->second;
        }
    }
    return e.evaluate(bindings);
}

bool check_statement(const Statement& s, const Configuration& cfg, QuantityTable& table) {
    return eval_expr(translate_statement(s, table), cfg, table).is_zero();
}

namespace {

std::string coord_text(const Coord& c) { return "(" + c.x.to_string() + ", " + c.y.to_string() + ")"; }

Rational area3(const Coord& a, const Coord& b, const Coord& c) { return cross(b - a, c - a) / Rational(2); }

Rational pyth3(const Coord& a, const Coord& b, const Coord& c) {
    return dist2(a, b) + dist2(b, c) - dist2(a, c);
}

Rational sratio(const Coord& a, const Coord& b, const Coord& c, const Coord& d) {
    Coord u = b - a, v = d - c;
    if (v.x.is_zero() && v.y.is_zero()) throw ZeroLengthRatioBase();
    if (!cross(u, v).is_zero()) throw NonParallelRatio();
    return v.x.is_zero() ? u.y / v.y : u.x / v.x;
}

Coord rand_point(Rng& rng) { return {rng.coordinate(), rng.coordinate()}; }

Coord rand_distinct(Rng& rng, const Coord& other) {
    for (;;) {
        Coord p = rand_point(rng);
        if (!(p == other)) return p;
    }
}

}  // namespace

AxiomReport validate_axiom(int index, int seed_count, std::uint64_t seed) {
    AxiomReport report;
    report.axiom = index;
    report.seeds = seed_count;
    Rng rng(seed * 8191 + static_cast<std::uint64_t>(index));

    auto fail = [&](const std::string& witness) { report.failures.push_back(witness); };

    for (int iter = 0; iter < seed_count; ++iter) {
        switch (index) {
            case 1: {  // AB = 0 iff A and B are identical
                Coord a = rand_point(rng);
                Coord b = iter % 2 == 0 ? a : rand_distinct(rng, a);
                bool zero = dist2(a, b).is_zero();
                if (zero != (a == b)) fail("A=" + coord_text(a) + " B=" + coord_text(b));
                break;
            }
            case 2: {  // S_ABC = S_CAB
                Coord a = rand_point(rng), b = rand_point(rng), c = rand_point(rng);
                if (area3(a, b, c) != area3(c, a, b))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c));
                break;
            }
            case 3: {  // S_ABC = -S_BAC
                Coord a = rand_point(rng), b = rand_point(rng), c = rand_point(rng);
                if (area3(a, b, c) != -area3(b, a, c))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c));
                break;
            }
            case 4: {  // Chasles: S_ABC = 0 -> AB + BC = AC
                Coord p = rand_point(rng);
                Coord d = rand_distinct(rng, {Rational(0), Rational(0)});
                Rational ta = rng.parameter(), tb = rng.parameter(), tc = rng.parameter();
                while (tc == ta) tc = rng.parameter();
                Coord a = p + ta * d, b = p + tb * d, c = p + tc * d;
                if (!area3(a, b, c).is_zero()) {
                    fail("collinear sample not collinear (internal)");
                    break;
                }
                Rational lhs = sratio(a, b, a, c) + sratio(b, c, a, c);
                if (lhs != Rational(1))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c));
                break;
            }
            case 5: {  // three non-collinear points exist
                Coord a{Rational(0), Rational(0)}, b{Rational(1), Rational(0)}, c{Rational(0), Rational(1)};
                if (area3(a, b, c).is_zero()) fail("unit triangle has zero area");
                break;
            }
            case 6: {  // S_ABC = S_DBC + S_ADC + S_ABD
                Coord a = rand_point(rng), b = rand_point(rng), c = rand_point(rng), d = rand_point(rng);
                if (area3(a, b, c) != area3(d, b, c) + area3(a, d, c) + area3(a, b, d))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c) + " D=" +
                         coord_text(d));
                break;
            }
            case 7:    // existence of P with S_ABP = 0, AP = r AB
            case 8: {  // and its uniqueness
                Coord a = rand_point(rng);
                Coord b = rand_distinct(rng, a);
                Rational r = rng.parameter();
                Coord p = a + r * (b - a);
                if (index == 7) {
                    if (!area3(a, b, p).is_zero() || sratio(a, p, a, b) != r)
                        fail("A=" + coord_text(a) + " B=" + coord_text(b) + " r=" + r.to_string());
                } else {
                    Coord p2 = b + (r - Rational(1)) * (b - a);  // same point, different arithmetic
                    if (!(p == p2))
                        fail("A=" + coord_text(a) + " B=" + coord_text(b) + " r=" + r.to_string());
                }
                break;
            }
            case 9: {  // PQ || CD and PQ/CD = 1 -> DQ || PC   (I.33)
                Coord c = rand_point(rng);
                Coord d = rand_distinct(rng, c);
                Coord p = rand_point(rng);
                Coord q = p + (d - c);
                if (sratio(p, q, c, d) != Rational(1)) {
                    fail("construction broke PQ/CD=1");
                    break;
                }
                if (area3(d, p, c) != area3(q, p, c))
                    fail("C=" + coord_text(c) + " D=" + coord_text(d) + " P=" + coord_text(p));
                break;
            }
            case 10: {  // S_PAC != 0, S_ABC = 0 -> AB/AC = S_PAB/S_PAC   (VI.1)
                Coord a = rand_point(rng);
                Coord dir = rand_distinct(rng, {Rational(0), Rational(0)});
                Rational tb = rng.parameter(), tc = rng.parameter();
                Coord b = a + tb * dir, c = a + tc * dir;
                Coord p = rand_point(rng);
                int guard = 0;
                while (area3(p, a, c).is_zero() && guard++ < 100) p = rand_point(rng);
                if (area3(p, a, c).is_zero()) break;
                if (sratio(a, b, a, c) != area3(p, a, b) / area3(p, a, c))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c) + " P=" +
                         coord_text(p));
                break;
            }
            case 11: {  // AB perp CD, EF perp CD -> AB || EF
                Coord c = rand_point(rng);
                Coord d = rand_distinct(rng, c);
                Coord n = perp(d - c);
                Coord a = rand_point(rng), e = rand_point(rng);
                Rational s1 = rng.parameter(), s2 = rng.parameter();
                Coord b = a + s1 * n, f = e + s2 * n;
                if (area3(a, e, f) != area3(b, e, f))
                    fail("C=" + coord_text(c) + " D=" + coord_text(d) + " A=" + coord_text(a) + " E=" +
                         coord_text(e));
                break;
            }
            case 12: {  // A != B, AB perp CD, AB || EF -> EF perp CD
                Coord c = rand_point(rng);
                Coord d = rand_distinct(rng, c);
                Coord n = perp(d - c);
                Coord a = rand_point(rng), e = rand_point(rng);
                Rational s1 = rng.parameter(), s2 = rng.parameter();
                Coord b = a + s1 * n, f = e + s2 * n;
                if (pyth3(e, c, d) != pyth3(f, c, d))
                    fail("C=" + coord_text(c) + " D=" + coord_text(d) + " E=" + coord_text(e));
                break;
            }
            case 13: {  // FA perp BC, S_FBC = 0 -> 4 S_ABC^2 = AF^2 BC^2
                Coord b = rand_point(rng);
                Coord c = rand_distinct(rng, b);
                Coord a = rand_point(rng);
                Rational t = dot(a - b, c - b) / dot(c - b, c - b);
                Coord f = b + t * (c - b);
                if (!dot(a - f, c - b).is_zero() || !area3(f, b, c).is_zero()) {
                    fail("foot construction broken (internal)");
                    break;
                }
                Rational s = area3(a, b, c);
                if (Rational(4) * s * s != dist2(a, f) * dist2(b, c))
                    fail("A=" + coord_text(a) + " B=" + coord_text(b) + " C=" + coord_text(c));
                break;
            }
            default:
                throw std::invalid_argument("axiom index must be 1..13");
        }
    }
    return report;
}

std::string axiom_report_json(const AxiomReport& report) {
    nlohmann::ordered_json j;
    j["axiom"] = report.axiom;
    j["seeds"] = report.seeds;
    j["failures"] = report.failures;
    return j.dump();
}

}  // namespace amp
