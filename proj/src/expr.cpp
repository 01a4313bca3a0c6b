#include "parcomod/expr.hpp"

#include <cctype>

namespace parcomod {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<ExprNode> run() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  static std::unique_ptr<ExprNode> node(ExprNode::Kind k, std::unique_ptr<ExprNode> a,
                                        std::unique_ptr<ExprNode> b = nullptr) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
  }
  static bool starts_primary(char c) {
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::unique_ptr<ExprNode> expr() {
    std::unique_ptr<ExprNode> acc;
    char c = peek();
    if (c == '+' || c == '-') {
      ++pos_;
      acc = term();
      if (c == '-') acc = node(ExprNode::Neg, std::move(acc));
    } else {
      acc = term();
    }
    for (;;) {
      c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      auto rhs = term();
      acc = node(c == '+' ? ExprNode::Add : ExprNode::Sub, std::move(acc), std::move(rhs));
    }
  }

  std::unique_ptr<ExprNode> term() {
    auto acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        auto rhs = factor();
        acc = node(c == '*' ? ExprNode::Mul : ExprNode::Div, std::move(acc), std::move(rhs));
      } else if (starts_primary(c)) {
        auto rhs = factor();
        acc = node(ExprNode::Mul, std::move(acc), std::move(rhs));
      } else {
        return acc;
      }
    }
  }

  std::unique_ptr<ExprNode> factor() {
    if (peek() == '-') {
      ++pos_;
      return node(ExprNode::Neg, factor());
    }
    auto base = primary();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      auto n = node(ExprNode::Pow, std::move(base));
      n->exponent = neg ? -e : e;
      return n;
    }
    return base;
  }

  std::unique_ptr<ExprNode> primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto n = std::make_unique<ExprNode>();
      n->kind = ExprNode::Number;
      n->number = mpz_class(std::string(s_.substr(start, pos_ - start)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      auto n = std::make_unique<ExprNode>();
      n->kind = ExprNode::Ident;
      n->name = std::string(s_.substr(start, pos_ - start));
      return n;
    }
    fail(c ? "unexpected token" : "unexpected end of input");
  }
};

}  // namespace

std::unique_ptr<ExprNode> parse_expr(std::string_view text) { return Parser(text).run(); }

}  // namespace parcomod
