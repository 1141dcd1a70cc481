#include "haarent/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "haarent/error.hpp"

namespace haarent::dsl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxNesting = 200;

const std::vector<std::string>& primary_expected() {
    static const std::vector<std::string> e{"number", "x", "(", "-", "exp", "log", "abs",
                                            "sqrt", "min", "max", "piecewise"};
    return e;
}

struct Token {
    enum class Kind { Number, Ident, Symbol, End };
    Kind kind = Kind::End;
    std::string_view text;
    std::size_t offset = 0;
    double value = 0.0;
};

bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse_expression_only() {
        if (src_.find_first_not_of(" \t\r\n") == std::string_view::npos)
            throw ParseError("empty expression", 0, primary_expected());
        auto root = expr();
        expect_end();
        return Expr(root);
    }

    MeasurableSet parse_set(const Space& space) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == '{') return atom_set(space);
        if (space.is_finite())
            fail("finite spaces take atom sets", pos_, {"{"});
        std::vector<Segment> pieces;
        while (true) {
            pieces.push_back(segment());
            skip_ws();
            if (accept_union()) continue;
            break;
        }
        expect_end();
        auto s = MeasurableSet::segments(std::move(pieces));
        if (!space.contains(s)) throw DomainError("set " + to_string(s) + " is outside the space");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& why, std::size_t at, std::vector<std::string> expected) {
        std::string msg = why + " at offset " + std::to_string(at);
        if (!expected.empty()) {
            msg += " (expected";
            for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", '" : " '") + expected[i] + "'";
            msg += ")";
        }
        throw ParseError(msg, at, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                      src_[pos_] == '\r'))
            ++pos_;
    }

    Token lex() {
        skip_ws();
        Token t;
        t.offset = pos_;
        if (pos_ >= src_.size()) return t;
        const char c = src_[pos_];
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            std::size_t end = pos_;
            while (end < src_.size() && is_digit(src_[end])) ++end;
            if (end < src_.size() && src_[end] == '.') {
                ++end;
                while (end < src_.size() && is_digit(src_[end])) ++end;
            }
            if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
                std::size_t exp = end + 1;
                if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-')) ++exp;
                if (exp < src_.size() && is_digit(src_[exp])) {
                    while (exp < src_.size() && is_digit(src_[exp])) ++exp;
                    end = exp;
                }
            }
            t.kind = Token::Kind::Number;
            t.text = src_.substr(pos_, end - pos_);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc() || ptr != t.text.data() + t.text.size() || !std::isfinite(v))
                fail("number out of range '" + std::string(t.text) + "'", pos_, {"number"});
            t.value = v;
            return t;
        }
        if (is_ident_start(c)) {
            std::size_t end = pos_;
            while (end < src_.size() && (is_ident_start(src_[end]) || is_digit(src_[end]))) ++end;
            t.kind = Token::Kind::Ident;
            t.text = src_.substr(pos_, end - pos_);
            return t;
        }
        if ((c == '<' || c == '>') && pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
            t.kind = Token::Kind::Symbol;
            t.text = src_.substr(pos_, 2);
            return t;
        }
        static constexpr std::string_view symbols = "+-*/^(),;:{}[]<>";
        if (symbols.find(c) != std::string_view::npos) {
            t.kind = Token::Kind::Symbol;
            t.text = src_.substr(pos_, 1);
            return t;
        }
        fail("unexpected character", pos_, primary_expected());
    }

    Token peek() {
        const auto save = pos_;
        auto t = lex();
        pos_ = save;
        return t;
    }

    void consume(const Token& t) { pos_ = t.offset + t.text.size(); }

    bool accept(std::string_view sym) {
        auto t = peek();
        if (t.kind == Token::Kind::Symbol && t.text == sym) {
            consume(t);
            return true;
        }
        return false;
    }

    void expect(std::string_view sym) {
        auto t = peek();
        if (t.kind == Token::Kind::Symbol && t.text == sym) {
            consume(t);
            return;
        }
        fail(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected token", t.offset,
             {std::string(sym)});
    }

    void expect_end() {
        auto t = peek();
        if (t.kind != Token::Kind::End)
            fail("trailing input", t.offset, {"end of input", "+", "-", "*", "/", "^"});
    }

    bool accept_union() {
        skip_ws();
        if (src_.substr(pos_).starts_with("\xE2\x88\xAA")) {
            pos_ += 3;
            return true;
        }
        if (pos_ < src_.size() && src_[pos_] == 'U') {
            ++pos_;
            return true;
        }
        return false;
    }

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxNesting) p.fail("expression nested too deeply", p.pos_, {});
        }
        ~DepthGuard() { --p.depth_; }
    };

    NodePtr expr() {
        DepthGuard guard(*this);
        auto left = term();
        while (true) {
            if (accept("+")) left = binary(Op::Add, left, term());
            else if (accept("-")) left = binary(Op::Sub, left, term());
            else return left;
        }
    }

    NodePtr term() {
        auto left = unary();
        while (true) {
            if (accept("*")) left = binary(Op::Mul, left, unary());
            else if (accept("/")) left = binary(Op::Div, left, unary());
            else return left;
        }
    }

    NodePtr unary() {
        DepthGuard guard(*this);
        if (accept("-")) return neg(unary());
        return power();
    }

    NodePtr power() {
        auto base = primary();
        if (accept("^")) return binary(Op::Pow, base, unary());
        return base;
    }

    NodePtr primary() {
        auto t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                consume(t);
                return num(t.value);
            case Token::Kind::Ident: {
                consume(t);
                if (t.text == "x") return var();
                if (t.text == "piecewise") return piecewise_body();
                static const std::pair<std::string_view, Func> funcs[] = {
                    {"exp", Func::Exp}, {"log", Func::Log}, {"abs", Func::Abs},
                    {"sqrt", Func::Sqrt}, {"min", Func::Min}, {"max", Func::Max}};
                for (const auto& [name, f] : funcs)
                    if (t.text == name) return call_body(f);
                fail("unknown identifier '" + std::string(t.text) + "'", t.offset, primary_expected());
            }
            case Token::Kind::Symbol:
                if (t.text == "(") {
                    consume(t);
                    auto inner = expr();
                    expect(")");
                    return inner;
                }
                fail("unexpected token '" + std::string(t.text) + "'", t.offset, primary_expected());
            case Token::Kind::End:
                fail("unexpected end of input", t.offset, primary_expected());
        }
        fail("unexpected token", t.offset, primary_expected());
    }

    NodePtr call_body(Func f) {
        expect("(");
        std::vector<NodePtr> args{expr()};
        while (accept(",")) args.push_back(expr());
        const std::size_t arity = (f == Func::Min || f == Func::Max) ? 2 : 1;
        if (args.size() != arity) {
            fail(std::string(to_string(f)) + " takes " + std::to_string(arity) + " argument(s)", pos_,
                 {arity > args.size() ? "," : ")"});
        }
        expect(")");
        return call(f, std::move(args));
    }

    double signed_bound() {
        const bool negative = accept("-");
        auto t = peek();
        if (t.kind != Token::Kind::Number) fail("expected guard bound", t.offset, {"number"});
        consume(t);
        return negative ? -t.value : t.value;
    }

    // Returns the relation as seen with x on the left.
    std::string relop() {
        auto t = peek();
        if (t.kind == Token::Kind::Symbol && (t.text == "<" || t.text == "<=" || t.text == ">" || t.text == ">=")) {
            consume(t);
            return std::string(t.text);
        }
        fail("expected comparison", t.offset, {"<", "<=", ">", ">="});
    }

    void apply(Guard& g, const std::string& op, double bound) {
        // op relates x to bound: x op bound
        if (op == "<" || op == "<=") {
            g.hi = bound;
            g.hi_closed = op == "<=";
        } else {
            g.lo = bound;
            g.lo_closed = op == ">=";
        }
    }

    static std::string flip(const std::string& op) {
        if (op == "<") return ">";
        if (op == "<=") return ">=";
        if (op == ">") return "<";
        return "<=";
    }

    Guard guard() {
        Guard g;
        g.lo = -kInf;
        g.hi = kInf;
        auto t = peek();
        const auto start = t.offset;
        if (t.kind == Token::Kind::Ident && t.text == "else") {
            consume(t);
            g.otherwise = true;
            return g;
        }
        if (t.kind == Token::Kind::Ident && t.text == "x") {
            consume(t);
            const auto op = relop();
            apply(g, op, signed_bound());
        } else if (t.kind == Token::Kind::Number || (t.kind == Token::Kind::Symbol && t.text == "-")) {
            const double first = signed_bound();
            const auto op1 = relop();
            auto xt = peek();
            if (!(xt.kind == Token::Kind::Ident && xt.text == "x")) fail("expected 'x' in guard", xt.offset, {"x"});
            consume(xt);
            apply(g, flip(op1), first);
            auto next = peek();
            if (next.kind == Token::Kind::Symbol &&
                (next.text == "<" || next.text == "<=" || next.text == ">" || next.text == ">=")) {
                const auto op2 = relop();
                if ((op1[0] == '<') != (op2[0] == '<')) fail("guard comparisons must point the same way", next.offset, {});
                apply(g, op2, signed_bound());
            }
        } else {
            fail("expected guard", t.offset, {"x", "number", "else"});
        }
        const bool empty = g.lo > g.hi || (g.lo == g.hi && !(g.lo_closed && g.hi_closed));
        if (empty) fail("empty guard interval", start, {});
        return g;
    }

    NodePtr piecewise_body() {
        const auto open = peek().offset;
        expect("{");
        std::vector<Branch> branches;
        while (true) {
            const auto at = peek().offset;
            Guard g = guard();
            expect(":");
            auto body = expr();
            if (!branches.empty()) {
                const Guard& prev = branches.back().guard;
                if (prev.otherwise) fail("'else' must be the last branch", at, {"}"});
                if (!g.otherwise) {
                    const bool ordered = prev.hi < g.lo || (prev.hi == g.lo && !(prev.hi_closed && g.lo_closed));
                    if (!ordered) fail("piecewise guards must be ordered and disjoint", at, {});
                }
            }
            branches.push_back({g, std::move(body)});
            if (accept(";")) {
                if (accept("}")) break;
                continue;
            }
            if (accept("}")) break;
            auto t = peek();
            fail("unterminated piecewise", t.kind == Token::Kind::End ? src_.size() : t.offset, {";", "}"});
        }
        if (branches.empty()) fail("empty piecewise", open, {"guard"});
        return piecewise(std::move(branches));
    }

    Segment segment() {
        expect("[");
        const auto lo_at = peek().offset;
        auto lo = expr();
        expect(",");
        const auto hi_at = peek().offset;
        auto hi = expr();
        expect("]");
        const Expr lo_e(lo), hi_e(hi);
        if (lo_e.uses_x()) fail("set bounds must be constant", lo_at, {"number"});
        if (hi_e.uses_x()) fail("set bounds must be constant", hi_at, {"number"});
        const double a = evaluate(lo_e, 0.0);
        const double b = evaluate(hi_e, 0.0);
        if (!(a <= b)) fail("segment bounds out of order", lo_at, {});
        return {a, b};
    }

    MeasurableSet atom_set(const Space& space) {
        if (!space.is_finite()) fail("interval spaces take segment sets", pos_, {"["});
        ++pos_;  // '{'
        const auto close = src_.find('}', pos_);
        if (close == std::string_view::npos) fail("unterminated atom set", src_.size(), {"}"});
        std::vector<std::size_t> atoms;
        std::size_t cursor = pos_;
        const auto body = src_.substr(pos_, close - pos_);
        if (body.find_first_not_of(" \t") != std::string_view::npos) {
            while (cursor <= close) {
                auto comma = src_.find(',', cursor);
                if (comma == std::string_view::npos || comma > close) comma = close;
                auto item = src_.substr(cursor, comma - cursor);
                const auto first = item.find_first_not_of(" \t");
                const auto last = item.find_last_not_of(" \t");
                if (first == std::string_view::npos) fail("empty atom", cursor, {"atom"});
                item = item.substr(first, last - first + 1);
                auto idx = space.find_label(item);
                if (!idx) {
                    double v = 0.0;
                    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
                    if (ec == std::errc() && ptr == item.data() + item.size()) idx = space.find_coord(v);
                }
                if (!idx) fail("unknown atom '" + std::string(item) + "'", cursor + first, {"atom label"});
                atoms.push_back(*idx);
                cursor = comma + 1;
            }
        }
        pos_ = close + 1;
        expect_end();
        return MeasurableSet::atoms(std::move(atoms));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    // Shortest representation that round-trips.
    for (int prec = 1; prec < 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        if (back == v) return buf;
    }
    return s;
}

int precedence(const Node& n) {
    switch (n.op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        case Op::Pow: return 4;
        case Op::Num: return n.value < 0.0 ? 0 : 5;
        default: return 5;
    }
}

std::string print_bound(double v) { return format_number(v); }

std::string print_guard(const Guard& g) {
    if (g.otherwise) return "else";
    const bool has_lo = g.lo != -kInf;
    const bool has_hi = g.hi != kInf;
    if (has_lo && has_hi)
        return print_bound(g.lo) + (g.lo_closed ? " <= x " : " < x ") + (g.hi_closed ? "<= " : "< ") +
               print_bound(g.hi);
    if (has_hi) return std::string("x ") + (g.hi_closed ? "<= " : "< ") + print_bound(g.hi);
    if (has_lo) return std::string("x ") + (g.lo_closed ? ">= " : "> ") + print_bound(g.lo);
    return "else";
}

void print_into(const Node& n, std::string& out) {
    auto child = [&](const NodePtr& c, bool parens) {
        if (parens) out += "(";
        print_into(*c, out);
        if (parens) out += ")";
    };
    switch (n.op) {
        case Op::Num:
            if (n.value < 0.0) out += "(" + format_number(n.value) + ")";
            else out += format_number(n.value);
            return;
        case Op::Var: out += "x"; return;
        case Op::Neg:
            out += "-";
            child(n.args[0], precedence(*n.args[0]) < 3);
            return;
        case Op::Add:
        case Op::Sub:
        case Op::Mul:
        case Op::Div: {
            const int p = precedence(n);
            child(n.args[0], precedence(*n.args[0]) < p);
            out += n.op == Op::Add ? " + " : n.op == Op::Sub ? " - " : n.op == Op::Mul ? " * " : " / ";
            child(n.args[1], precedence(*n.args[1]) <= p);
            return;
        }
        case Op::Pow:
            child(n.args[0], precedence(*n.args[0]) <= 4);
            out += "^";
            child(n.args[1], precedence(*n.args[1]) < 3);
            return;
        case Op::Call:
            out += to_string(n.func);
            out += "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out += ", ";
                print_into(*n.args[i], out);
            }
            out += ")";
            return;
        case Op::Piecewise:
            out += "piecewise { ";
            for (std::size_t i = 0; i < n.branches.size(); ++i) {
                if (i) out += "; ";
                out += print_guard(n.branches[i].guard) + ": ";
                print_into(*n.branches[i].body, out);
            }
            out += " }";
            return;
    }
}

[[noreturn]] void eval_fail(const std::string& why, const Node& n, double x) {
    const std::string sub = print(n);
    throw EvaluationError(why + " in '" + sub + "' at x = " + format_number(x), sub, x);
}

double eval_node(const Node& n, double x) {
    double r = 0.0;
    switch (n.op) {
        case Op::Num: return n.value;
        case Op::Var: return x;
        case Op::Neg: return -eval_node(*n.args[0], x);
        case Op::Add: r = eval_node(*n.args[0], x) + eval_node(*n.args[1], x); break;
        case Op::Sub: r = eval_node(*n.args[0], x) - eval_node(*n.args[1], x); break;
        case Op::Mul: r = eval_node(*n.args[0], x) * eval_node(*n.args[1], x); break;
        case Op::Div: {
            const double a = eval_node(*n.args[0], x);
            const double b = eval_node(*n.args[1], x);
            if (b == 0.0) eval_fail("division by zero", n, x);
            r = a / b;
            break;
        }
        case Op::Pow: r = std::pow(eval_node(*n.args[0], x), eval_node(*n.args[1], x)); break;
        case Op::Call: {
            const double a = eval_node(*n.args[0], x);
            switch (n.func) {
                case Func::Exp: r = std::exp(a); break;
                case Func::Log:
                    if (!(a > 0.0)) eval_fail("log of a nonpositive value", n, x);
                    r = std::log(a);
                    break;
                case Func::Abs: r = std::abs(a); break;
                case Func::Sqrt:
                    if (a < 0.0) eval_fail("sqrt of a negative value", n, x);
                    r = std::sqrt(a);
                    break;
                case Func::Min: r = std::min(a, eval_node(*n.args[1], x)); break;
                case Func::Max: r = std::max(a, eval_node(*n.args[1], x)); break;
            }
            break;
        }
        case Op::Piecewise:
            for (const auto& b : n.branches)
                if (b.guard.matches(x)) return eval_node(*b.body, x);
            eval_fail("no piecewise branch covers the point", n, x);
    }
    if (!std::isfinite(r)) eval_fail("non-finite result", n, x);
    return r;
}

void find_roots(const Node& g, const Segment& seg, std::vector<double>& out) {
    constexpr std::size_t kSamples = 1024;
    auto value = [&](double x) {
        try {
            return eval_node(g, x);
        } catch (const EvaluationError&) {
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    std::vector<double> xs(kSamples + 1), fs(kSamples + 1);
    for (std::size_t i = 0; i <= kSamples; ++i) {
        xs[i] = seg.lo + (seg.hi - seg.lo) * static_cast<double>(i) / kSamples;
        fs[i] = value(xs[i]);
        if (fs[i] == 0.0) out.push_back(xs[i]);
    }
    for (std::size_t i = 0; i < kSamples; ++i) {
        if (!std::isfinite(fs[i]) || !std::isfinite(fs[i + 1])) continue;
        if (fs[i] == 0.0 || fs[i + 1] == 0.0 || (fs[i] < 0.0) == (fs[i + 1] < 0.0)) continue;
        double a = xs[i], b = xs[i + 1], fa = fs[i];
        for (int it = 0; it < 200; ++it) {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b) break;
            const double fm = value(m);
            if (fm == 0.0) {
                a = b = m;
                break;
            }
            if (!std::isfinite(fm)) break;
            if ((fm < 0.0) == (fa < 0.0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        out.push_back(0.5 * (a + b));
    }
}

bool is_nonneg_integer_literal(const Node& n) {
    return n.op == Op::Num && n.value >= 0.0 && std::floor(n.value) == n.value;
}

void collect(const Node& n, const Segment& seg, std::vector<double>& out) {
    for (const auto& a : n.args) collect(*a, seg, out);
    switch (n.op) {
        case Op::Div: find_roots(*n.args[1], seg, out); break;
        case Op::Pow:
            if (!is_nonneg_integer_literal(*n.args[1])) find_roots(*n.args[0], seg, out);
            break;
        case Op::Call:
            if (n.func == Func::Min || n.func == Func::Max) {
                const Node diff{Op::Sub, 0.0, Func::Exp, {n.args[0], n.args[1]}, {}};
                find_roots(diff, seg, out);
            } else if (n.func != Func::Exp) {
                find_roots(*n.args[0], seg, out);
            }
            break;
        case Op::Piecewise:
            for (const auto& b : n.branches) {
                collect(*b.body, seg, out);
                for (double v : {b.guard.lo, b.guard.hi})
                    if (!b.guard.otherwise && std::isfinite(v) && seg.lo <= v && v <= seg.hi) out.push_back(v);
            }
            break;
        default: break;
    }
}

bool uses_x_node(const Node& n) {
    if (n.op == Op::Var) return true;
    for (const auto& a : n.args)
        if (uses_x_node(*a)) return true;
    for (const auto& b : n.branches)
        if (uses_x_node(*b.body)) return true;
    return n.op == Op::Piecewise;
}

}  // namespace

bool Guard::matches(double x) const {
    if (otherwise) return true;
    const bool above = lo_closed ? x >= lo : x > lo;
    const bool below = hi_closed ? x <= hi : x < hi;
    return above && below;
}

NodePtr num(double v) {
    auto n = std::make_shared<Node>();
    n->op = Op::Num;
    n->value = v;
    return n;
}

NodePtr var() {
    auto n = std::make_shared<Node>();
    n->op = Op::Var;
    return n;
}

NodePtr neg(NodePtr a) {
    auto n = std::make_shared<Node>();
    n->op = Op::Neg;
    n->args = {std::move(a)};
    return n;
}

NodePtr binary(Op op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->args = {std::move(a), std::move(b)};
    return n;
}

NodePtr call(Func f, std::vector<NodePtr> args) {
    auto n = std::make_shared<Node>();
    n->op = Op::Call;
    n->func = f;
    n->args = std::move(args);
    return n;
}

NodePtr piecewise(std::vector<Branch> branches) {
    auto n = std::make_shared<Node>();
    n->op = Op::Piecewise;
    n->branches = std::move(branches);
    return n;
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.op != b.op || a.args.size() != b.args.size() || a.branches.size() != b.branches.size()) return false;
    if (a.op == Op::Num && !(a.value == b.value && std::signbit(a.value) == std::signbit(b.value))) return false;
    if (a.op == Op::Call && a.func != b.func) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!structurally_equal(*a.args[i], *b.args[i])) return false;
    for (std::size_t i = 0; i < a.branches.size(); ++i)
        if (!(a.branches[i].guard == b.branches[i].guard) ||
            !structurally_equal(*a.branches[i].body, *b.branches[i].body))
            return false;
    return true;
}

Expr::Expr(NodePtr root) : root_(std::move(root)) {
    if (!root_) throw DomainError("empty expression tree");
}

bool Expr::uses_x() const { return uses_x_node(*root_); }

Expr parse(std::string_view src) { return Parser(src).parse_expression_only(); }

std::string print(const Node& n) {
    std::string out;
    print_into(n, out);
    return out;
}

std::string print(const Expr& e) { return print(e.root()); }

double evaluate(const Expr& e, double x) { return eval_node(e.root(), x); }

std::vector<double> breakpoints(const Expr& e, const MeasurableSet& s) {
    std::vector<double> out;
    if (s.is_atoms()) return out;
    for (const auto& seg : s.pieces()) collect(e.root(), seg, out);
    std::sort(out.begin(), out.end());
    std::vector<double> unique;
    for (double v : out)
        if (unique.empty() || std::abs(v - unique.back()) > 1e-12 * std::max(1.0, std::abs(v)))
            unique.push_back(v);
    return unique;
}

Density make_density(const Expr& e, const Space& space) {
    Density d;
    d.eval = [e](double x) { return evaluate(e, x); };
    if (!space.is_finite()) d.breakpoints = breakpoints(e, space.whole());
    if (!e.uses_x()) {
        const double c = evaluate(e, 0.0);
        if (c >= 0.0) {
            d.constant = c;
            d.sup = c;
        }
    }
    return d;
}

MeasurableSet parse_set(std::string_view src, const Space& space) { return Parser(src).parse_set(space); }

const char* to_string(Func f) {
    switch (f) {
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Abs: return "abs";
        case Func::Sqrt: return "sqrt";
        case Func::Min: return "min";
        case Func::Max: return "max";
    }
    return "?";
}

}  // namespace haarent::dsl
