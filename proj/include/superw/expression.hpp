#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "superw/cartan.hpp"
#include "superw/sergeev.hpp"

namespace superw {

/// Syntax error or a semantic error tied to a source position (1-based).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Generator, Named, Call, Add, Sub, Mul, Neg };

  Kind kind = Kind::Number;
  Rational value;            // Number
  std::string name;          // Generator ("e", "f"), Named (preset name) or Call (function)
  std::vector<int> indices;  // Generator and index-taking calls
  std::vector<ExprPtr> args;
  int line = 1;
  int column = 1;

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses the expression grammar. `n` is the q(n) rank used for index checks;
/// pass 0 for a named preset, where only gen(name) generators are allowed.
ExprPtr parse_expression(std::string_view src, int n);

/// Canonical text for an expression; parsing it back gives an equal tree.
std::string render(const Expr& e);

/// Result of evaluating an expression: an element of U(g), a reduced element
/// π(·) of U(g)/I_χ, or an element of U(h).
struct Value {
  enum class Kind { Raw, Reduced, Cartan, Scalar };
  Kind kind = Kind::Scalar;
  Element element;
  CartanElement cartan;
  Rational scalar;

  std::string str() const;
};

/// Evaluates parsed expressions against one algebra preset.
class Evaluator {
 public:
  explicit Evaluator(WhittakerPtr w);
  Value evaluate(const Expr& e);
  WhittakerData& whittaker() { return *w_; }

 private:
  Value call(const Expr& e);
  Element as_element(const Value& v, const Expr& at) const;
  Value combine(const Expr& e, Value a, Value b);
  SergeevCache& sergeev(const Expr& at);

  WhittakerPtr w_;
  std::unique_ptr<SergeevCache> s_;
  std::vector<Element> phis_;
};

}  // namespace superw
