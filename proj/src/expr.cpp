#include "hardy/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy::expr {

namespace {

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Ast run() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("empty expression", 0);
    NodePtr root = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) throw ParseError("trailing input", pos_);
    return Ast{std::move(root)};
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        lhs = make(Node{Binary{BinOp::Add, lhs, parse_term()}});
      } else if (eat('-')) {
        lhs = make(Node{Binary{BinOp::Sub, lhs, parse_term()}});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (eat('*')) {
        lhs = make(Node{Binary{BinOp::Mul, lhs, parse_factor()}});
      } else if (eat('/')) {
        lhs = make(Node{Binary{BinOp::Div, lhs, parse_factor()}});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_factor() {
    NodePtr base = parse_unary();
    if (eat('^')) {
      // right-associative
      return make(Node{Binary{BinOp::Pow, base, parse_factor()}});
    }
    return base;
  }

  NodePtr parse_unary() {
    if (eat('-')) return make(Node{Neg{parse_unary()}});
    return parse_atom();
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // not an exponent after all
      }
    }
    const std::string text(src_.substr(start, pos_ - start));
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) throw ParseError("bad number", start);
    return make(Node{Number{value}});
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = src_.substr(start, pos_ - start);
    if (name == "x") return make(Node{Var{}});
    if (name == "pi") return make(Node{Const{Named::Pi}});
    if (name == "e") return make(Node{Const{Named::E}});
    Func fn;
    if (name == "exp") fn = Func::Exp;
    else if (name == "log") fn = Func::Log;
    else if (name == "sqrt") fn = Func::Sqrt;
    else if (name == "abs") fn = Func::Abs;
    else if (name == "sin") fn = Func::Sin;
    else if (name == "cos") fn = Func::Cos;
    else throw ParseError("unknown identifier '" + std::string(name) + "'", start);
    if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
    NodePtr arg = parse_expr();
    if (!eat(')')) throw ParseError("expected ')'", pos_);
    return make(Node{Call{fn, std::move(arg)}});
  }
};

double eval_node(const Node& n, double x);

double eval_pow(double base, double expo) {
  if (base < 0.0 && expo != std::floor(expo)) {
    throw EvalError("fractional power of a negative base");
  }
  if (base == 0.0 && expo < 0.0) throw EvalError("zero raised to a negative power");
  return std::pow(base, expo);
}

double eval_call(Func fn, double a) {
  switch (fn) {
    case Func::Exp: return std::exp(a);
    case Func::Log:
      if (!(a > 0.0)) throw EvalError("log of a nonpositive value");
      return std::log(a);
    case Func::Sqrt:
      if (a < 0.0) throw EvalError("sqrt of a negative value");
      return std::sqrt(a);
    case Func::Abs: return std::fabs(a);
    case Func::Sin: return std::sin(a);
    case Func::Cos: return std::cos(a);
  }
  throw EvalError("unknown function");
}

double eval_node(const Node& n, double x) {
  struct V {
    double x;
    double operator()(const Number& m) const { return m.value; }
    double operator()(const Var&) const { return x; }
    double operator()(const Neg& m) const { return -eval_node(*m.child, x); }
    double operator()(const Binary& m) const {
      const double a = eval_node(*m.lhs, x);
      const double b = eval_node(*m.rhs, x);
      switch (m.op) {
        case BinOp::Add: return a + b;
        case BinOp::Sub: return a - b;
        case BinOp::Mul: return a * b;
        case BinOp::Div:
          if (b == 0.0) throw EvalError("division by zero");
          return a / b;
        case BinOp::Pow: return eval_pow(a, b);
      }
      throw EvalError("unknown operator");
    }
    double operator()(const Call& m) const { return eval_call(m.fn, eval_node(*m.arg, x)); }
    double operator()(const Const& m) const {
      return m.id == Named::Pi ? 3.14159265358979323846 : 2.71828182845904523536;
    }
  };
  return std::visit(V{x}, n.v);
}

const char* func_name(Func fn) {
  switch (fn) {
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sqrt: return "sqrt";
    case Func::Abs: return "abs";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
  }
  return "?";
}

void print_node(const Node& n, std::ostringstream& out) {
  struct V {
    std::ostringstream& out;
    void operator()(const Number& m) const {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", m.value);
      out << buf;
    }
    void operator()(const Var&) const { out << "x"; }
    void operator()(const Neg& m) const {
      out << "(-";
      print_node(*m.child, out);
      out << ")";
    }
    void operator()(const Binary& m) const {
      static const char* ops = "+-*/^";
      out << "(";
      print_node(*m.lhs, out);
      out << ops[static_cast<int>(m.op)];
      print_node(*m.rhs, out);
      out << ")";
    }
    void operator()(const Call& m) const {
      out << func_name(m.fn) << "(";
      print_node(*m.arg, out);
      out << ")";
    }
    void operator()(const Const& m) const { out << (m.id == Named::Pi ? "pi" : "e"); }
  };
  std::visit(V{out}, n.v);
}

bool equal_node(const Node& a, const Node& b) {
  if (a.v.index() != b.v.index()) return false;
  struct V {
    const Node& other;
    bool operator()(const Number& m) const { return m.value == std::get<Number>(other.v).value; }
    bool operator()(const Var&) const { return true; }
    bool operator()(const Neg& m) const {
      return equal_node(*m.child, *std::get<Neg>(other.v).child);
    }
    bool operator()(const Binary& m) const {
      const Binary& o = std::get<Binary>(other.v);
      return m.op == o.op && equal_node(*m.lhs, *o.lhs) && equal_node(*m.rhs, *o.rhs);
    }
    bool operator()(const Call& m) const {
      const Call& o = std::get<Call>(other.v);
      return m.fn == o.fn && equal_node(*m.arg, *o.arg);
    }
    bool operator()(const Const& m) const { return m.id == std::get<Const>(other.v).id; }
  };
  return std::visit(V{b}, a.v);
}

}  // namespace

Ast parse(std::string_view src) { return Parser(src).run(); }

double eval(const Ast& ast, double x) {
  if (!ast.root) throw EvalError("empty expression");
  const double r = eval_node(*ast.root, x);
  if (std::isnan(r)) throw EvalError("expression evaluated to NaN");
  return r;
}

std::string to_string(const Ast& ast) {
  std::ostringstream out;
  if (ast.root) print_node(*ast.root, out);
  return out.str();
}

bool equal(const Ast& a, const Ast& b) {
  if (!a.root || !b.root) return a.root == b.root;
  return equal_node(*a.root, *b.root);
}

}  // namespace hardy::expr
