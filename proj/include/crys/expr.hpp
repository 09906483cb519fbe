#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "crys/rational.hpp"

namespace crys {

// Subtraction-free rational expression. Nodes are immutable, hash-consed and
// shared, so the big coordinate formulas stay compact and evaluation can be
// memoized per node.
class RatExpr {
 public:
  enum class Kind { var, constant, add, mul, div, pow };

  struct Node {
    Kind kind;
    std::string name;                    // var
    Rat value;                           // constant (> 0)
    std::shared_ptr<const Node> lhs, rhs;
    long exponent = 0;                   // pow
    std::size_t id = 0;
  };

  using Env = std::map<std::string, Rat>;

  RatExpr() = default;

  static RatExpr var(const std::string& name);
  static RatExpr constant(const Rat& c);  // throws std::invalid_argument unless c > 0
  static RatExpr constant(long num, long den = 1);

  RatExpr pow(long e) const;

  Kind kind() const { return n_->kind; }
  const Node* raw() const { return n_.get(); }
  bool valid() const { return n_ != nullptr; }

  // Exact evaluation; throws std::out_of_range on an unbound variable.
  Rat eval(const Env& env) const;

  // Evaluates a whole coordinate vector with one shared memo, so common
  // subexpressions across components are computed once.
  static std::vector<Rat> eval_all(const std::vector<RatExpr>& es, const Env& env);

  void collect_vars(std::set<std::string>& out) const;
  std::string to_string() const;
  std::string to_json() const;

  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator/(const RatExpr& a, const RatExpr& b);

 private:
  explicit RatExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Piecewise-linear (max-plus) expression; evaluation over the integers is
// total.
class PLExpr {
 public:
  enum class Kind { var, constant, plus, minus, max, smul };

  struct Node {
    Kind kind;
    std::string name;
    long value = 0;                      // constant, or smul scalar
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t id = 0;
  };

  using Env = std::map<std::string, long>;

  PLExpr() = default;

  static PLExpr var(const std::string& name);
  static PLExpr constant(long v);
  static PLExpr max(const PLExpr& a, const PLExpr& b);
  PLExpr scaled(long k) const;

  Kind kind() const { return n_->kind; }
  const Node* raw() const { return n_.get(); }
  bool valid() const { return n_ != nullptr; }

  long eval(const Env& env) const;
  void collect_vars(std::set<std::string>& out) const;
  std::string to_string() const;

  friend PLExpr operator+(const PLExpr& a, const PLExpr& b);
  friend PLExpr operator-(const PLExpr& a, const PLExpr& b);

 private:
  explicit PLExpr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// The ultra-discretization pass: * -> +, / -> -, + -> max, x^m -> m*x, and
// positive constants collapse to 0.
PLExpr tropicalize(const RatExpr& e);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text grammar (EBNF):
//   program := { "let" IDENT "=" expr ";" } expr
//   expr    := term { "+" term }
//   term    := factor { ("*" | "/") factor }
//   factor  := primary [ "^" [ "-" ] INT ]
//   primary := NUMBER | IDENT | "(" expr ")"
//   NUMBER  := DIGITS [ "/" DIGITS ]
// There is no subtraction and no unary minus; only exponents may be negative.
RatExpr parse_rat_expr(const std::string& text);

// True iff the text parses in the grammar above (subtraction-freeness is
// structural, so parsing is the whole check).
bool check_subtraction_free(const std::string& text);

}  // namespace crys
