#include "amp/geom.hpp"

#include <algorithm>

namespace amp {

Quantity Quantity::area(std::string a, std::string b, std::string c) {
    return Quantity{QuantityKind::signed_area, {std::move(a), std::move(b), std::move(c)}};
}

Quantity Quantity::pyth(std::string a, std::string b, std::string c) {
    return Quantity{QuantityKind::pyth, {std::move(a), std::move(b), std::move(c)}};
}

Quantity Quantity::ratio(std::string p, std::string q, std::string r, std::string s) {
    return Quantity{QuantityKind::ratio, {std::move(p), std::move(q), std::move(r), std::move(s)}};
}

namespace {

bool all_single_char(const std::vector<std::string>& pts) {
    return std::all_of(pts.begin(), pts.end(), [](const std::string& p) { return p.size() == 1; });
}

std::string join(const std::vector<std::string>& pts, size_t from, size_t to, const char* sep) {
    std::string out;
    for (size_t i = from; i < to; ++i) {
        if (i > from) out += sep;
        out += pts[i];
    }
    return out;
}

}  // namespace

std::string Quantity::spelling() const {
    const char* prefix = kind == QuantityKind::signed_area ? "S" : (kind == QuantityKind::pyth ? "P" : "R");
    const char* sep = all_single_char(pts) ? "" : "_";
    return std::string(prefix) + "_" + join(pts, 0, pts.size(), sep);
}

std::string Quantity::display() const {
    if (kind == QuantityKind::ratio) {
        const char* sep = all_single_char(pts) ? "" : "_";
        return join(pts, 0, 2, sep) + "/" + join(pts, 2, 4, sep);
    }
    return spelling();
}

bool Quantity::mentions(const std::string& point) const {
    return std::find(pts.begin(), pts.end(), point) != pts.end();
}

CanonicalQuantity canonicalize_quantity(const Quantity& q) {
    switch (q.kind) {
        case QuantityKind::signed_area: {
            const auto& p = q.pts;
            if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) return {std::nullopt, 0};
            std::vector<std::string> sorted = p;
            int sign = 1;
            // three elements: bubble-sort parity
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2 - i; ++j)
                    if (sorted[j] > sorted[j + 1]) {
                        std::swap(sorted[j], sorted[j + 1]);
                        sign = -sign;
                    }
            return {Quantity{QuantityKind::signed_area, sorted}, sign};
        }
        case QuantityKind::pyth: {
            const auto& p = q.pts;
            if (p[0] == p[1] || p[1] == p[2]) return {std::nullopt, 0};  // P_AAB = P_ABB = 0
            if (p[0] == p[2]) return {q, 1};                             // P_ABA = 2*AB^2 stays an atom
            std::vector<std::string> rev{p[2], p[1], p[0]};
            return {Quantity{QuantityKind::pyth, std::min(p, rev)}, 1};  // P_ABC = P_CBA
        }
        case QuantityKind::ratio: {
            const auto& p = q.pts;
            if (p[0] == p[1]) return {std::nullopt, 0};  // zero-length numerator segment
            if (p[0] > p[1])
                return {Quantity{QuantityKind::ratio, {p[1], p[0], p[2], p[3]}}, -1};
            return {q, 1};
        }
    }
    throw std::logic_error("unreachable quantity kind");
}

std::string QuantityTable::intern(const Quantity& q) {
    std::string s = q.spelling();
    by_spelling_.emplace(s, q);
    return s;
}

ExprPtr QuantityTable::leaf(const Quantity& q) { return ExprNode::symbol(intern(q), q.display()); }

RationalExpr QuantityTable::canonical_expr(const Quantity& q) {
    CanonicalQuantity c = canonicalize_quantity(q);
    if (c.sign == 0) return RationalExpr();
    RationalExpr sym = RationalExpr::symbol(intern(*c.q));
    return c.sign > 0 ? sym : -sym;
}

const Quantity* QuantityTable::lookup(const std::string& spelling) const {
    auto it = by_spelling_.find(spelling);
    return it == by_spelling_.end() ? nullptr : &it->second;
}

std::map<std::string, RationalExpr> QuantityTable::canonical_bindings(const std::set<std::string>& symbols) const {
    std::map<std::string, RationalExpr> out;
    for (const auto& s : symbols) {
        auto it = by_spelling_.find(s);
        if (it == by_spelling_.end()) continue;  // scalar parameter, not a quantity
        CanonicalQuantity c = canonicalize_quantity(it->second);
        if (c.sign == 0) {
            out.emplace(s, RationalExpr());
        } else if (c.q->spelling() != s || c.sign < 0) {
            RationalExpr sym = RationalExpr::symbol(c.q->spelling());
            out.emplace(s, c.sign > 0 ? sym : -sym);
        }
    }
    return out;
}

GeoExpr translate_statement(const Statement& s, QuantityTable& table) {
    auto atom = [&](const Quantity& q) { return RationalExpr::symbol(table.intern(q)); };
    switch (s.kind) {
        case Statement::Kind::parallel:
            // segments p0p1 and p2p3 parallel iff S_{p0 p2 p3} = S_{p1 p2 p3}
            return atom(Quantity::area(s.pts[0], s.pts[2], s.pts[3])) -
                   atom(Quantity::area(s.pts[1], s.pts[2], s.pts[3]));
        case Statement::Kind::perpendicular:
            return atom(Quantity::pyth(s.pts[0], s.pts[2], s.pts[3])) -
                   atom(Quantity::pyth(s.pts[1], s.pts[2], s.pts[3]));
        case Statement::Kind::collinear:
            return atom(Quantity::area(s.pts[0], s.pts[1], s.pts[2]));
        case Statement::Kind::equal:
            return to_rational_expr(s.lhs) - to_rational_expr(s.rhs);
    }
    throw std::logic_error("unreachable statement kind");
}

namespace {

struct AffineCoords {
    RationalExpr alpha, beta;
};

}  // namespace

BasisReduction area_coordinate_reduce(const GeoExpr& e,
                                      const std::array<std::string, 3>& basis,
                                      QuantityTable& table) {
    const std::string &O = basis[0], &U = basis[1], &V = basis[2];
    if (O == U || U == V || O == V) throw DegenerateBasis();

    BasisReduction out;
    RationalExpr s_ouv = table.canonical_expr(Quantity::area(O, U, V));
    RationalExpr c2 = table.canonical_expr(Quantity::pyth(O, U, O)) / RationalExpr::constant(Rational(2));
    RationalExpr m = table.canonical_expr(Quantity::pyth(U, O, V)) / RationalExpr::constant(Rational(2));
    // Gram relation: OV^2 = (4*S_OUV^2 + (OU.OV)^2) / OU^2
    RationalExpr four = RationalExpr::constant(Rational(4));
    RationalExpr v2 = (four * s_ouv * s_ouv + m * m) / c2;

    out.conds.push_back({s_ouv, "S_" + O + U + V + " != 0 (reduction basis nondegenerate)"});

    std::map<std::string, AffineCoords> coords;
    RationalExpr zero, one = RationalExpr::constant(Rational(1));
    coords[O] = {zero, zero};
    coords[U] = {one, zero};
    coords[V] = {zero, one};
    auto coord_of = [&](const std::string& P) -> const AffineCoords& {
        auto it = coords.find(P);
        if (it != coords.end()) return it->second;
        AffineCoords c{-(table.canonical_expr(Quantity::area(O, V, P)) / s_ouv),
                       table.canonical_expr(Quantity::area(O, U, P)) / s_ouv};
        return coords.emplace(P, std::move(c)).first->second;
    };

    auto dot = [&](const std::string& A, const std::string& B, const std::string& C,
                   const std::string& D) {  // AB . CD
        const AffineCoords &a = coord_of(A), &b = coord_of(B), &c = coord_of(C), &d = coord_of(D);
        RationalExpr da = b.alpha - a.alpha, db = b.beta - a.beta;
        RationalExpr ea = d.alpha - c.alpha, eb = d.beta - c.beta;
        return da * ea * c2 + (da * eb + db * ea) * m + db * eb * v2;
    };
    auto dist2 = [&](const std::string& A, const std::string& B) { return dot(A, B, A, B); };

    std::map<std::string, RationalExpr> bindings;
    for (const auto& sym : e.symbols()) {
        const Quantity* q = table.lookup(sym);
        if (!q) continue;  // scalar parameter
        switch (q->kind) {
            case QuantityKind::signed_area: {
                const AffineCoords &a = coord_of(q->pts[0]), &b = coord_of(q->pts[1]), &c = coord_of(q->pts[2]);
                RationalExpr det = (b.alpha - a.alpha) * (c.beta - a.beta) - (b.beta - a.beta) * (c.alpha - a.alpha);
                bindings.emplace(sym, s_ouv * det);
                break;
            }
            case QuantityKind::pyth: {
                RationalExpr v = dist2(q->pts[0], q->pts[1]) + dist2(q->pts[1], q->pts[2]) - dist2(q->pts[0], q->pts[2]);
                bindings.emplace(sym, std::move(v));
                break;
            }
            case QuantityKind::ratio: {
                RationalExpr den = dist2(q->pts[2], q->pts[3]);
                out.conds.push_back({den, q->pts[2] + q->pts[3] + " nondegenerate (ratio base)"});
                bindings.emplace(sym, dot(q->pts[0], q->pts[1], q->pts[2], q->pts[3]) / den);
                break;
            }
        }
    }
    out.expr = e.substitute(bindings);
    return out;
}

}  // namespace amp
