#include "amp/expr_tree.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace amp {

ExprPtr ExprNode::number(Rational v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::number;
    n->value = std::move(v);
    return n;
}

ExprPtr ExprNode::symbol(std::string name, std::string display) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::symbol;
    n->display = display.empty() ? name : std::move(display);
    n->name = std::move(name);
    return n;
}

ExprPtr ExprNode::binary(Kind k, ExprPtr l, ExprPtr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

ExprPtr ExprNode::neg(ExprPtr x) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::neg;
    n->lhs = std::move(x);
    return n;
}

ExprPtr ExprNode::pow(ExprPtr base, int e) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::pow;
    n->lhs = std::move(base);
    n->exponent = e;
    return n;
}

namespace {

const char* op_text(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::add: return "+";
        case ExprNode::Kind::sub: return "-";
        case ExprNode::Kind::mul: return "*";
        case ExprNode::Kind::div: return "/";
        default: return "?";
    }
}

void render(const ExprPtr& e, std::string& out) {
    switch (e->kind) {
        case ExprNode::Kind::number:
            out += e->value.to_string();
            return;
        case ExprNode::Kind::symbol:
            out += e->display;
            return;
        case ExprNode::Kind::neg:
            out += "( -1 * ";
            render(e->lhs, out);
            out += ")";
            return;
        case ExprNode::Kind::pow:
            out += "( ";
            render(e->lhs, out);
            out += " ^ ";
            out += std::to_string(e->exponent);
            out += ")";
            return;
        default:
            out += "( ";
            render(e->lhs, out);
            out += ' ';
            out += op_text(e->kind);
            out += ' ';
            render(e->rhs, out);
            out += ")";
            return;
    }
}

}  // namespace

std::string to_text(const ExprPtr& e) {
    std::string out;
    render(e, out);
    return out;
}

RationalExpr to_rational_expr(const ExprPtr& e) {
    switch (e->kind) {
        case ExprNode::Kind::number: return RationalExpr::constant(e->value);
        case ExprNode::Kind::symbol: return RationalExpr::symbol(e->name);
        case ExprNode::Kind::add: return to_rational_expr(e->lhs) + to_rational_expr(e->rhs);
        case ExprNode::Kind::sub: return to_rational_expr(e->lhs) - to_rational_expr(e->rhs);
        case ExprNode::Kind::mul: return to_rational_expr(e->lhs) * to_rational_expr(e->rhs);
        case ExprNode::Kind::div: return to_rational_expr(e->lhs) / to_rational_expr(e->rhs);
        case ExprNode::Kind::neg: return -to_rational_expr(e->lhs);
        case ExprNode::Kind::pow: {
            RationalExpr base = to_rational_expr(e->lhs);
            RationalExpr acc = RationalExpr::constant(Rational(1));
            for (int i = 0; i < e->exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("unreachable tree kind");
}

namespace {

ExprPtr monomial_tree(const Monomial& m) {
    std::vector<ExprPtr> factors;
    for (const auto& [sym, exp] : m) {
        ExprPtr leaf = ExprNode::symbol(sym);
        factors.push_back(exp == 1 ? leaf : ExprNode::pow(leaf, exp));
    }
    ExprPtr acc = factors.back();
    for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = ExprNode::mul(*it, acc);
    return acc;
}

ExprPtr poly_tree(const Polynomial& p) {
    if (p.is_zero()) return ExprNode::number(Rational(0));
    std::vector<ExprPtr> terms;
    for (const auto& [mono, coef] : p.terms()) {
        if (mono.empty()) {
            terms.push_back(ExprNode::number(coef));
        } else if (coef == Rational(1)) {
            terms.push_back(monomial_tree(mono));
        } else {
            terms.push_back(ExprNode::mul(ExprNode::number(coef), monomial_tree(mono)));
        }
    }
    ExprPtr acc = terms.back();
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) acc = ExprNode::add(*it, acc);
    return acc;
}

}  // namespace

ExprPtr tree_of(const RationalExpr& e) {
    ExprPtr num = poly_tree(e.num());
    if (e.den().is_constant() && e.den().constant_value() == Rational(1)) return num;
    return ExprNode::div(num, poly_tree(e.den()));
}

ExprPtr tree_substitute(const ExprPtr& e, const std::map<std::string, ExprPtr>& bindings) {
    switch (e->kind) {
        case ExprNode::Kind::number: return e;
        case ExprNode::Kind::symbol: {
            auto it = bindings.find(e->name);
            return it != bindings.end() ? it->second : e;
        }
        case ExprNode::Kind::neg: return ExprNode::neg(tree_substitute(e->lhs, bindings));
        case ExprNode::Kind::pow: return ExprNode::pow(tree_substitute(e->lhs, bindings), e->exponent);
        default:
            return ExprNode::binary(e->kind, tree_substitute(e->lhs, bindings), tree_substitute(e->rhs, bindings));
    }
}

bool tree_mentions(const ExprPtr& e, const std::string& symbol_key) {
    switch (e->kind) {
        case ExprNode::Kind::number: return false;
        case ExprNode::Kind::symbol: return e->name == symbol_key;
        case ExprNode::Kind::neg:
        case ExprNode::Kind::pow: return tree_mentions(e->lhs, symbol_key);
        default: return tree_mentions(e->lhs, symbol_key) || tree_mentions(e->rhs, symbol_key);
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        skip_ws();
        if (pos_ != src_.size()) throw ExprParseError("trailing input at offset " + std::to_string(pos_));
        return e;
    }

private:
    ExprPtr sum() {
        ExprPtr e = product();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                e = ExprNode::add(e, product());
            } else if (accept('-')) {
                e = ExprNode::sub(e, product());
            } else {
                return e;
            }
        }
    }

    ExprPtr product() {
        ExprPtr e = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                e = ExprNode::mul(e, factor());
            } else if (accept('/')) {
                e = ExprNode::div(e, factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        skip_ws();
        if (accept('-')) return ExprNode::neg(factor());
        ExprPtr e = primary();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) throw ExprParseError("exponent expected");
            e = ExprNode::pow(e, std::stoi(std::string(src_.substr(start, pos_ - start))));
        }
        return e;
    }

    ExprPtr primary() {
        skip_ws();
        if (accept('(')) {
            ExprPtr e = sum();
            skip_ws();
            if (!accept(')')) throw ExprParseError("')' expected");
            return e;
        }
        if (pos_ >= src_.size()) throw ExprParseError("unexpected end of input");
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                ++pos_;
            return ExprNode::number(Rational::parse(src_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            return ExprNode::symbol(std::string(src_.substr(start, pos_ - start)));
        }
        throw ExprParseError(std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view src_;
    size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_tree(std::string_view text) { return Parser(text).parse(); }

std::string RationalExpr::to_string() const { return to_text(tree_of(*this)); }

RationalExpr RationalExpr::parse(std::string_view text) { return parse_expr(text); }

}  // namespace amp
