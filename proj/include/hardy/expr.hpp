#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

namespace hardy::expr {

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Exp, Log, Sqrt, Abs, Sin, Cos };
enum class Named { Pi, E };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  double value;
};
struct Var {};  // the single free variable x
struct Neg {
  NodePtr child;
};
struct Binary {
  BinOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Func fn;
  NodePtr arg;
};
struct Const {
  Named id;
};

struct Node {
  std::variant<Number, Var, Neg, Binary, Call, Const> v;
};

// Immutable expression tree in the variable x.
struct Ast {
  NodePtr root;
};

// Grammar (precedence low to high):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?          '^' is right-associative
//   unary  := '-' unary | atom
//   atom   := number | 'x' | const | fn '(' expr ')' | '(' expr ')'
// Throws ParseError (with byte offset) on bad syntax or unknown identifiers.
Ast parse(std::string_view src);

// Evaluates at x. Division by zero, log of a nonpositive value, sqrt of a
// negative value, and fractional powers of negative bases throw EvalError;
// a NaN never escapes silently.
double eval(const Ast& ast, double x);

// Canonical fully parenthesized form; parse(to_string(a)) is structurally
// equal to a.
std::string to_string(const Ast& ast);

bool equal(const Ast& a, const Ast& b);

}  // namespace hardy::expr
