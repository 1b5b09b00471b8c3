#include "cheegerlab/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace cheegerlab {
namespace detail {

enum class Op { Num, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Abs, Min, Max, Exp, Sin, Cos };

struct ExprNode {
  Op op = Op::Num;
  double value = 0.0;
  std::shared_ptr<const ExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr leaf(Op op, double v = 0.0) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->value = v;
  return n;
}

NodePtr node(Op op, NodePtr l, NodePtr r = nullptr) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

class Parser {
 public:
  Parser(const std::string& s, int line) : s_(s), line_(line) {}

  NodePtr run() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg, line_, static_cast<int>(pos_) + 1);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    auto e = parse_product();
    while (true) {
      if (eat('+')) {
        e = node(Op::Add, e, parse_product());
      } else if (eat('-')) {
        e = node(Op::Sub, e, parse_product());
      } else {
        return e;
      }
    }
  }

  NodePtr parse_product() {
    auto e = parse_unary();
    while (true) {
      if (eat('*')) {
        e = node(Op::Mul, e, parse_unary());
      } else if (eat('/')) {
        e = node(Op::Div, e, parse_unary());
      } else {
        return e;
      }
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return node(Op::Neg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (eat('^')) return node(Op::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a value");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    if (eat('(')) {
      auto e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return leaf(Op::Num, v);
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isalnum(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "x") return leaf(Op::VarX);
    if (name == "y") return leaf(Op::VarY);
    Op op;
    int arity = 1;
    if (name == "abs") {
      op = Op::Abs;
    } else if (name == "exp") {
      op = Op::Exp;
    } else if (name == "sin") {
      op = Op::Sin;
    } else if (name == "cos") {
      op = Op::Cos;
    } else if (name == "min") {
      op = Op::Min;
      arity = 2;
    } else if (name == "max") {
      op = Op::Max;
      arity = 2;
    } else {
      pos_ = start;
      fail("unknown identifier '" + name + "'");
    }
    if (!eat('(')) fail("expected '(' after '" + name + "'");
    auto first = parse_sum();
    NodePtr second;
    if (arity == 2) {
      if (!eat(',')) fail("'" + name + "' takes two arguments");
      second = parse_sum();
    }
    if (!eat(')')) fail("expected ')'");
    return node(op, std::move(first), std::move(second));
  }

  const std::string& s_;
  int line_;
  std::size_t pos_ = 0;
};

double eval_node(const ExprNode& n, double x, double y) {
  switch (n.op) {
    case Op::Num: return n.value;
    case Op::VarX: return x;
    case Op::VarY: return y;
    case Op::Neg: return -eval_node(*n.lhs, x, y);
    case Op::Add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
    case Op::Sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
    case Op::Mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
    case Op::Div: return eval_node(*n.lhs, x, y) / eval_node(*n.rhs, x, y);
    case Op::Pow: return std::pow(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
    case Op::Abs: return std::fabs(eval_node(*n.lhs, x, y));
    case Op::Min: return std::min(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
    case Op::Max: return std::max(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
    case Op::Exp: return std::exp(eval_node(*n.lhs, x, y));
    case Op::Sin: return std::sin(eval_node(*n.lhs, x, y));
    case Op::Cos: return std::cos(eval_node(*n.lhs, x, y));
  }
  return 0.0;
}

}  // namespace
}  // namespace detail

Expression Expression::parse(const std::string& text, int line) {
  Expression e;
  e.text_ = text;
  e.root_ = detail::Parser(text, line).run();
  return e;
}

double Expression::eval(double x, double y) const {
  return detail::eval_node(*root_, x, y);
}

}  // namespace cheegerlab
