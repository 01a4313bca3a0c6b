#pragma once

// Small infix expression language shared by field literals and algebra
// element literals: numbers, identifiers, + - * / ^, parentheses and
// juxtaposition as multiplication.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parcomod {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExprNode {
  enum Kind { Number, Ident, Add, Sub, Mul, Div, Neg, Pow } kind;
  mpz_class number;
  std::string name;
  long exponent = 0;
  std::unique_ptr<ExprNode> lhs, rhs;
};

std::unique_ptr<ExprNode> parse_expr(std::string_view text);

// Ops must provide: V number(const mpz_class&), V ident(const std::string&),
// V add(V,V), V sub(V,V), V mul(V,V), V div(V,V), V neg(V), V pow(V,long).
template <class V, class Ops>
V eval_expr(const ExprNode& n, Ops& ops) {
  switch (n.kind) {
    case ExprNode::Number: return ops.number(n.number);
    case ExprNode::Ident: return ops.ident(n.name);
    case ExprNode::Add: return ops.add(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
    case ExprNode::Sub: return ops.sub(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
    case ExprNode::Mul: return ops.mul(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
    case ExprNode::Div: return ops.div(eval_expr<V>(*n.lhs, ops), eval_expr<V>(*n.rhs, ops));
    case ExprNode::Neg: return ops.neg(eval_expr<V>(*n.lhs, ops));
    case ExprNode::Pow: return ops.pow(eval_expr<V>(*n.lhs, ops), n.exponent);
  }
  throw ParseError("bad expression node");
}

}  // namespace parcomod
