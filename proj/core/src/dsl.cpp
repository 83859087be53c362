#include "amp/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace amp {

const ConstructionStep* Script::find(const std::string& name) const {
    for (const auto& s : steps)
        if (s.name == name) return &s;
    return nullptr;
}

bool Script::is_point(const std::string& name) const {
    const ConstructionStep* s = find(name);
    return s && s->defines_point();
}

bool Script::is_line(const std::string& name) const {
    const ConstructionStep* s = find(name);
    return s && !s->defines_point();
}

std::vector<std::string> Script::free_points() const {
    std::vector<std::string> out;
    for (const auto& s : steps)
        if (s.kind == ConstructionStep::Kind::free_point) out.push_back(s.name);
    return out;
}

std::vector<std::string> Script::constructed_points() const {
    std::vector<std::string> out;
    for (const auto& s : steps)
        if (s.defines_point() && s.kind != ConstructionStep::Kind::free_point) out.push_back(s.name);
    return out;
}

std::string online_param_name(const std::string& point) { return "t_" + point; }

namespace {

struct Token {
    std::string text;
    int line;
    bool is_number;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    int line = 1;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '%') {
            while (i < src.size() && src[i] != '\n') ++i;
        } else if (c == '{' || c == '}') {
            out.push_back({std::string(1, c), line, false});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < src.size() &&
                    (std::isdigit(static_cast<unsigned char>(src[i + 1])) || src[i + 1] == '.'))) {
            size_t start = i;
            if (c == '-') ++i;
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.' ||
                                      src[i] == '/'))
                ++i;
            out.push_back({std::string(src.substr(start, i - start)), line, true});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i;
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            out.push_back({std::string(src.substr(start, i - start)), line, false});
        } else {
            throw SyntaxError(line, "token (got '" + std::string(1, c) + "')");
        }
    }
    return out;
}

class ScriptParser {
public:
    explicit ScriptParser(std::string_view src) : tokens_(tokenize(src)) {}

    Script parse() {
        Script script;
        bool have_goal = false;
        while (pos_ < tokens_.size()) {
            const Token& t = peek();
            if (t.text == "prove" || t.text == "proof") {
                parse_goal(script);
                have_goal = true;
                if (pos_ != tokens_.size()) throw SyntaxError(peek().line, "end of file after goal");
                break;
            }
            parse_step(script);
        }
        if (!have_goal) throw SyntaxError(last_line_, "a prove { ... } goal");
        validate(script);
        return script;
    }

private:
    const Token& peek() const {
        if (pos_ >= tokens_.size()) throw SyntaxError(last_line_, "more input");
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        last_line_ = t.line;
        return t;
    }

    std::string expect_id() {
        Token t = next();
        if (t.is_number || t.text == "{" || t.text == "}") throw SyntaxError(t.line, "an identifier");
        if (t.text.find('_') != std::string::npos)
            throw SyntaxError(t.line, "an identifier without underscores");
        return t.text;
    }

    Rational expect_num() {
        Token t = next();
        if (!t.is_number) throw SyntaxError(t.line, "a number");
        try {
            return Rational::parse(t.text);
        } catch (const NumberParseError&) {
            throw SyntaxError(t.line, "a valid number (got '" + t.text + "')");
        }
    }

    void expect(const std::string& text) {
        Token t = next();
        if (t.text != text) throw SyntaxError(t.line, "'" + text + "'");
    }

    void parse_step(Script& script) {
        Token kw = next();
        ConstructionStep step;
        step.line = kw.line;
        using K = ConstructionStep::Kind;
        if (kw.text == "point") {
            step.kind = K::free_point;
            step.name = expect_id();
            step.hint_x = expect_num();
            step.hint_y = expect_num();
        } else if (kw.text == "line") {
            step.kind = K::line_def;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "intersec" || kw.text == "intersect") {
            step.kind = K::intersect;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "online") {
            step.kind = K::on_line;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "midpoint") {
            step.kind = K::midpoint;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "parallel") {
            step.kind = K::parallel_line;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "towards") {
            step.kind = K::towards;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
            if (peek().is_number) {
                step.ratio = expect_num();
            } else {
                step.ratio_symbol = expect_id();
            }
        } else if (kw.text == "translate") {
            step.kind = K::translate;
            step.name = expect_id();
            step.args = {expect_id(), expect_id(), expect_id()};
        } else if (kw.text == "foot") {
            step.kind = K::foot;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else if (kw.text == "perp") {
            step.kind = K::perp_line;
            step.name = expect_id();
            step.args = {expect_id(), expect_id()};
        } else {
            throw SyntaxError(kw.line, "a construction keyword or prove (got '" + kw.text + "')");
        }
        script.steps.push_back(std::move(step));
    }

    /// N identifiers, or a single token of N concatenated single-letter names.
    std::vector<std::string> vertex_args(size_t n) {
        std::vector<std::string> out;
        Token first = next();
        if (first.is_number || first.text == "{" || first.text == "}")
            throw SyntaxError(first.line, "point names");
        if (first.text.size() == n && peek().text == "}") {
            for (char c : first.text) out.emplace_back(1, c);
            return out;
        }
        out.push_back(first.text);
        while (out.size() < n) out.push_back(expect_id());
        return out;
    }

    Quantity parse_qty(Script& script) {
        Token kw = next();
        Quantity q{};
        if (kw.text == "sratio") {
            auto v = vertex_args(4);
            q = Quantity::ratio(v[0], v[1], v[2], v[3]);
        } else if (kw.text == "signed_area3") {
            auto v = vertex_args(3);
            q = Quantity::area(v[0], v[1], v[2]);
        } else if (kw.text == "pythagoras_difference3") {
            auto v = vertex_args(3);
            q = Quantity::pyth(v[0], v[1], v[2]);
        } else {
            throw SyntaxError(kw.line, "sratio, signed_area3 or pythagoras_difference3");
        }
        script.goal_atoms.push_back(q);
        return q;
    }

    void parse_goal(Script& script) {
        next();  // prove / proof
        expect("{");
        Token kw = next();
        Statement stmt;
        if (kw.text == "equal") {
            stmt.kind = Statement::Kind::equal;
            expect("{");
            Quantity l = parse_qty(script);
            expect("}");
            expect("{");
            Quantity r = parse_qty(script);
            expect("}");
            stmt.lhs = ExprNode::symbol(l.spelling(), l.display());
            stmt.rhs = ExprNode::symbol(r.spelling(), r.display());
        } else if (kw.text == "parallel" || kw.text == "perpendicular") {
            stmt.kind = kw.text == "parallel" ? Statement::Kind::parallel : Statement::Kind::perpendicular;
            stmt.pts = {expect_id(), expect_id(), expect_id(), expect_id()};
        } else if (kw.text == "collinear") {
            stmt.kind = Statement::Kind::collinear;
            stmt.pts = {expect_id(), expect_id(), expect_id()};
        } else {
            throw SyntaxError(kw.line, "equal, parallel, perpendicular or collinear");
        }
        expect("}");
        script.goal = std::move(stmt);
    }

    void validate(Script& script) {
        std::map<std::string, bool> declared;  // name -> defines a point
        for (auto& step : script.steps) {
            auto check_point = [&](const std::string& n) {
                auto it = declared.find(n);
                if (it == declared.end()) throw UseBeforeDefinition(step.line, n);
                if (!it->second) throw ArityError(step.line, "'" + n + "' names a line, a point is required");
            };
            auto check_line = [&](const std::string& n) {
                auto it = declared.find(n);
                if (it == declared.end()) throw UseBeforeDefinition(step.line, n);
                if (it->second) throw ArityError(step.line, "'" + n + "' names a point, a line is required");
            };
            using K = ConstructionStep::Kind;
            switch (step.kind) {
                case K::free_point: break;
                case K::line_def:
                case K::on_line:
                case K::midpoint:
                case K::towards:
                    check_point(step.args[0]);
                    check_point(step.args[1]);
                    break;
                case K::translate:
                    for (const auto& a : step.args) check_point(a);
                    break;
                case K::intersect:
                    check_line(step.args[0]);
                    check_line(step.args[1]);
                    break;
                case K::parallel_line:
                case K::foot:
                case K::perp_line:
                    check_point(step.args[0]);
                    check_line(step.args[1]);
                    break;
            }
            if (declared.count(step.name)) throw Redefinition(step.line, step.name);
            declared[step.name] = step.defines_point();
            if (step.kind == K::on_line) script.params.insert(online_param_name(step.name));
            if (step.kind == K::towards && !step.ratio_symbol.empty()) script.params.insert(step.ratio_symbol);
        }

        int goal_line = script.steps.empty() ? 1 : script.steps.back().line;
        bool wants_area = script.goal.kind != Statement::Kind::equal;
        for (const auto& q : script.goal_atoms)
            if (q.kind != QuantityKind::ratio) wants_area = true;
        std::vector<std::string> goal_points = script.goal.pts;
        for (const auto& q : script.goal_atoms)
            goal_points.insert(goal_points.end(), q.pts.begin(), q.pts.end());
        for (const auto& p : goal_points) {
            auto it = declared.find(p);
            if (it == declared.end()) throw UseBeforeDefinition(goal_line, p);
            if (!it->second) throw ArityError(goal_line, "'" + p + "' names a line, a point is required");
        }
        if (wants_area && script.free_points().size() < 3)
            throw ArityError(goal_line, "a goal involving areas needs at least three free points");
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int last_line_ = 1;
};

}  // namespace

Script parse_script(std::string_view source) { return ScriptParser(source).parse(); }

namespace {

std::string qty_text(const Quantity& q) {
    std::string kw = q.kind == QuantityKind::ratio
                         ? "sratio"
                         : (q.kind == QuantityKind::signed_area ? "signed_area3" : "pythagoras_difference3");
    std::string out = kw;
    for (const auto& p : q.pts) {
        out += ' ';
        out += p;
    }
    return out;
}

}  // namespace

std::string pretty_print(const Script& script) {
    std::string out;
    using K = ConstructionStep::Kind;
    for (const auto& s : script.steps) {
        switch (s.kind) {
            case K::free_point:
                out += "point " + s.name + " " + s.hint_x.to_string() + " " + s.hint_y.to_string();
                break;
            case K::line_def: out += "line " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::intersect: out += "intersec " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::on_line: out += "online " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::midpoint: out += "midpoint " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::parallel_line: out += "parallel " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::towards:
                out += "towards " + s.name + " " + s.args[0] + " " + s.args[1] + " " +
                       (s.ratio ? s.ratio->to_string() : s.ratio_symbol);
                break;
            case K::translate:
                out += "translate " + s.name + " " + s.args[0] + " " + s.args[1] + " " + s.args[2];
                break;
            case K::foot: out += "foot " + s.name + " " + s.args[0] + " " + s.args[1]; break;
            case K::perp_line: out += "perp " + s.name + " " + s.args[0] + " " + s.args[1]; break;
        }
        out += '\n';
    }
    out += "prove { ";
    const Statement& g = script.goal;
    switch (g.kind) {
        case Statement::Kind::equal:
            out += "equal { " + qty_text(script.goal_atoms.at(script.goal_atoms.size() - 2)) + " } { " +
                   qty_text(script.goal_atoms.back()) + " }";
            break;
        case Statement::Kind::parallel:
        case Statement::Kind::perpendicular:
        case Statement::Kind::collinear: {
            out += g.kind == Statement::Kind::parallel
                       ? "parallel"
                       : (g.kind == Statement::Kind::perpendicular ? "perpendicular" : "collinear");
            for (const auto& p : g.pts) out += " " + p;
            break;
        }
    }
    out += " }\n";
    return out;
}

Script generalize(const Script& script, const std::vector<size_t>* which) {
    Script out = script;
    std::vector<size_t> targets;
    if (which) {
        targets = *which;
        for (size_t i : targets) {
            if (i >= out.steps.size() || out.steps[i].kind != ConstructionStep::Kind::towards ||
                !out.steps[i].ratio)
                throw NotGeneralizable(i);
        }
    } else {
        for (size_t i = 0; i < out.steps.size(); ++i)
            if (out.steps[i].kind == ConstructionStep::Kind::towards && out.steps[i].ratio)
                targets.push_back(i);
    }
    if (targets.empty()) return out;

    std::set<std::string> taken = out.params;
    for (const auto& s : out.steps) taken.insert(s.name);
    int counter = 0;
    auto fresh = [&]() {
        for (;;) {
            ++counter;
            std::string name = counter == 1 ? "r" : "r" + std::to_string(counter);
            if (!taken.count(name)) {
                taken.insert(name);
                return name;
            }
        }
    };

    std::map<std::string, std::string> symbol_of_value;  // ratio value -> shared symbol
    for (size_t i : targets) {
        auto& step = out.steps[i];
        std::string key = step.ratio->to_string();
        auto it = symbol_of_value.find(key);
        if (it == symbol_of_value.end()) it = symbol_of_value.emplace(key, fresh()).first;
        step.ratio.reset();
        step.ratio_symbol = it->second;
        out.params.insert(it->second);
    }
    return out;
}

}  // namespace amp
