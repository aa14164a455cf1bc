#pragma once

// Small arithmetic-expression evaluator for position-dependent scenario
// inputs, e.g. "6 * s^(x + 16)" or "1.2 + exp(-3 * (y + 2))".
//
// Grammar: + - * / ^ (right-associative), unary minus, parentheses, numeric
// literals, named variables, and the functions exp, log, sqrt, sin, cos.

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "firefront/error.hpp"

namespace firefront {

class Expression {
 public:
  /// Parses `text`; every identifier must appear in `variables`, whose order
  /// fixes the slot layout expected by eval().
  static Expression parse(const std::string& text, const std::vector<std::string>& variables) {
    Parser p{text, variables, 0};
    Expression e;
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("unexpected '" + std::string(1, text[p.pos]) + "'");
    e.text_ = text;
    e.arity_ = variables.size();
    return e;
  }

  static Expression constant(double v) {
    Expression e;
    e.root_ = std::make_shared<Node>(Node{Op::number, v, 0, {}, {}});
    e.text_ = std::to_string(v);
    return e;
  }

  double eval(std::span<const double> slots) const {
    if (slots.size() < arity_) throw ValidationError("expression evaluated with too few variables");
    return eval_node(*root_, slots);
  }

  bool is_constant() const { return depends_on_nothing(*root_); }
  const std::string& text() const { return text_; }

 private:
  enum class Op { number, variable, add, sub, mul, div, pow, neg, exp, log, sqrt, sin, cos };

  struct Node {
    Op op;
    double value;
    std::size_t slot;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  static double eval_node(const Node& n, std::span<const double> s) {
    switch (n.op) {
      case Op::number: return n.value;
      case Op::variable: return s[n.slot];
      case Op::add: return eval_node(*n.lhs, s) + eval_node(*n.rhs, s);
      case Op::sub: return eval_node(*n.lhs, s) - eval_node(*n.rhs, s);
      case Op::mul: return eval_node(*n.lhs, s) * eval_node(*n.rhs, s);
      case Op::div: return eval_node(*n.lhs, s) / eval_node(*n.rhs, s);
      case Op::pow: return std::pow(eval_node(*n.lhs, s), eval_node(*n.rhs, s));
      case Op::neg: return -eval_node(*n.lhs, s);
      case Op::exp: return std::exp(eval_node(*n.lhs, s));
      case Op::log: return std::log(eval_node(*n.lhs, s));
      case Op::sqrt: return std::sqrt(eval_node(*n.lhs, s));
      case Op::sin: return std::sin(eval_node(*n.lhs, s));
      case Op::cos: return std::cos(eval_node(*n.lhs, s));
    }
    return NAN;
  }

  static bool depends_on_nothing(const Node& n) {
    if (n.op == Op::variable) return false;
    if (n.lhs && !depends_on_nothing(*n.lhs)) return false;
    if (n.rhs && !depends_on_nothing(*n.rhs)) return false;
    return true;
  }

  struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos;

    [[noreturn]] void fail(const std::string& what) const {
      throw ParseError("expression '" + s + "': " + what, 1, pos + 1);
    }
    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool accept(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    static NodePtr binary(Op op, NodePtr l, NodePtr r) {
      return std::make_shared<Node>(Node{op, 0.0, 0, std::move(l), std::move(r)});
    }

    NodePtr parse_expr() {
      NodePtr lhs = parse_term();
      for (;;) {
        if (accept('+')) lhs = binary(Op::add, lhs, parse_term());
        else if (accept('-')) lhs = binary(Op::sub, lhs, parse_term());
        else return lhs;
      }
    }
    NodePtr parse_term() {
      NodePtr lhs = parse_unary();
      for (;;) {
        if (accept('*')) lhs = binary(Op::mul, lhs, parse_unary());
        else if (accept('/')) lhs = binary(Op::div, lhs, parse_unary());
        else return lhs;
      }
    }
    NodePtr parse_unary() {
      if (accept('-')) return binary(Op::neg, parse_unary(), nullptr);
      if (accept('+')) return parse_unary();
      return parse_power();
    }
    NodePtr parse_power() {
      NodePtr base = parse_primary();
      if (accept('^')) return binary(Op::pow, base, parse_unary());
      return base;
    }
    NodePtr parse_primary() {
      skip_ws();
      if (pos >= s.size()) fail("unexpected end of input");
      const char c = s[pos];
      if (accept('(')) {
        NodePtr inner = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return inner;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        const char* begin = s.c_str() + pos;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("bad number");
        pos += static_cast<std::size_t>(end - begin);
        return std::make_shared<Node>(Node{Op::number, v, 0, {}, {}});
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        const std::string name = s.substr(start, pos - start);
        static const std::map<std::string, Op> functions{
            {"exp", Op::exp}, {"log", Op::log}, {"sqrt", Op::sqrt}, {"sin", Op::sin}, {"cos", Op::cos}};
        if (auto f = functions.find(name); f != functions.end()) {
          if (!accept('(')) fail("expected '(' after " + name);
          NodePtr arg = parse_expr();
          if (!accept(')')) fail("expected ')'");
          return binary(f->second, arg, nullptr);
        }
        for (std::size_t i = 0; i < vars.size(); ++i)
          if (vars[i] == name) return std::make_shared<Node>(Node{Op::variable, 0.0, i, {}, {}});
        pos = start;
        fail("unknown symbol '" + name + "'");
      }
      fail("unexpected '" + std::string(1, c) + "'");
    }
  };

  NodePtr root_;
  std::string text_;
  std::size_t arity_ = 0;
};

}  // namespace firefront
