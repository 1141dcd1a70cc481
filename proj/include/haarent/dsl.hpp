#pragma once

// Density expression language.
//
//   expr      = term { ("+" | "-") term } ;
//   term      = unary { ("*" | "/") unary } ;
//   unary     = "-" unary | power ;
//   power     = primary [ "^" unary ] ;            (right associative)
//   primary   = number | "x" | func "(" expr { "," expr } ")"
//             | "(" expr ")" | piecewise ;
//   func      = "exp" | "log" | "abs" | "sqrt" | "min" | "max" ;
//   piecewise = "piecewise" "{" branch { ";" branch } [ ";" ] "}" ;
//   branch    = guard ":" expr ;
//   guard     = "else" | "x" relop bound | bound relop "x" [ relop bound ] ;
//   relop     = "<" | "<=" | ">" | ">=" ;
//   bound     = [ "-" ] number ;
//   number    = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ]
//             | "." digits [ exponent ] ;
//
// "^" binds tighter than unary minus: "-x^2" is -(x^2). Piecewise guards
// must be ordered, pairwise disjoint intervals; "else" may only come last.
//
// Sets (command line and spec files):
//   set       = "{" [ atom { "," atom } ] "}"
//             | segment { ("U" | "∪") segment } ;
//   segment   = "[" expr "," expr "]" ;            (constant expressions)

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "haarent/measure.hpp"

namespace haarent::dsl {

enum class Op { Num, Var, Neg, Add, Sub, Mul, Div, Pow, Call, Piecewise };
enum class Func { Exp, Log, Abs, Sqrt, Min, Max };

// Interval guard; lo = -inf / hi = +inf for one-sided guards.
struct Guard {
    bool otherwise = false;
    double lo = 0.0;
    double hi = 0.0;
    bool lo_closed = false;
    bool hi_closed = false;

    bool matches(double x) const;
    bool operator==(const Guard&) const = default;
};

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Branch {
    Guard guard;
    NodePtr body;
};

struct Node {
    Op op = Op::Num;
    double value = 0.0;          // Num
    Func func = Func::Exp;       // Call
    std::vector<NodePtr> args;   // operands / call arguments
    std::vector<Branch> branches;
};

NodePtr num(double v);
NodePtr var();
NodePtr neg(NodePtr a);
NodePtr binary(Op op, NodePtr a, NodePtr b);
NodePtr call(Func f, std::vector<NodePtr> args);
NodePtr piecewise(std::vector<Branch> branches);

bool structurally_equal(const Node& a, const Node& b);

// Parsed, immutable expression.
class Expr {
public:
    explicit Expr(NodePtr root);
    const Node& root() const noexcept { return *root_; }
    NodePtr root_ptr() const noexcept { return root_; }
    bool uses_x() const;
    bool operator==(const Expr& other) const { return structurally_equal(*root_, *other.root_); }

private:
    NodePtr root_;
};

// Throws ParseError with the byte offset and the set of expected tokens.
Expr parse(std::string_view src);

// Canonical text with minimal parentheses; parse(print(e)) == e.
std::string print(const Expr& e);
std::string print(const Node& n);

// Throws EvaluationError for log/sqrt outside their domains, division by
// zero, non-finite results and points not covered by any piecewise guard.
double evaluate(const Expr& e, double x);

// Guard boundaries and roots of divisors, log/sqrt/abs arguments, min/max
// differences and non-integer power bases that lie in s (closed).
std::vector<double> breakpoints(const Expr& e, const MeasurableSet& s);

// Density backed by the expression, with breakpoints over the whole space.
Density make_density(const Expr& e, const Space& space);

MeasurableSet parse_set(std::string_view src, const Space& space);

const char* to_string(Func f);

}  // namespace haarent::dsl
