#include "superw/expression.hpp"

#include <cctype>
#include <map>

namespace superw {

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.indices != b.indices) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!(*a.args[i] == *b.args[i])) return false;
  return true;
}

namespace {

enum class Arg { Expr, Index, Name };

struct Signature {
  std::vector<Arg> args;
  std::vector<int> minimum;  // per index argument
  int bounded = 0;  // leading index arguments bounded by n
};

const std::map<std::string, Signature, std::less<>>& functions() {
  static const std::map<std::string, Signature, std::less<>> f = {
      {"e", {{Arg::Index, Arg::Index}, {1, 1}, 2}},
      {"f", {{Arg::Index, Arg::Index}, {1, 1}, 2}},
      {"x", {{Arg::Index}, {1}, 1}},
      {"xi", {{Arg::Index}, {1}, 1}},
      {"gen", {{Arg::Name}, {}, 0}},
      {"sergeev_e", {{Arg::Index, Arg::Index, Arg::Index}, {1, 1, 1}, 2}},
      {"sergeev_f", {{Arg::Index, Arg::Index, Arg::Index}, {1, 1, 1}, 2}},
      {"central", {{Arg::Index}, {0}, 0}},
      {"phi", {{Arg::Index}, {0}, 0}},
      {"pi", {{Arg::Expr}, {}, 0}},
      {"theta", {{Arg::Expr}, {}, 0}},
      {"top", {{Arg::Expr}, {}, 0}},
      {"bracket", {{Arg::Expr, Arg::Expr}, {}, 0}},
  };
  return f;
}

bool needs_queer(std::string_view name) { return name != "gen" && name != "pi" && name != "top" && name != "bracket"; }

class Parser {
 public:
  Parser(std::string_view src, int n) : src_(src), n_(n) {}

  ExprPtr parse() {
    skip();
    if (pos_ >= src_.size()) fail("empty expression");
    ExprPtr e = sum();
    skip();
    if (pos_ < src_.size()) fail(std::string("unexpected '") + src_[pos_] + "'");
    return e;
  }

 private:
  struct Mark {
    int line, column;
  };

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }
  [[noreturn]] static void fail_at(const std::string& msg, Mark m) { throw ParseError(msg, m.line, m.column); }

  Mark mark() const { return {line_, column_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + src_[pos_] + "'");
    }
  }

  static ExprPtr node(Expr::Kind k, Mark m, std::vector<ExprPtr> args) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = std::move(args);
    e->line = m.line;
    e->column = m.column;
    return e;
  }

  ExprPtr sum() {
    ExprPtr lhs = product();
    for (;;) {
      skip();
      Mark m = mark();
      if (accept('+')) lhs = node(Expr::Kind::Add, m, {lhs, product()});
      else if (accept('-')) lhs = node(Expr::Kind::Sub, m, {lhs, product()});
      else return lhs;
    }
  }

  ExprPtr product() {
    ExprPtr lhs = unary();
    for (;;) {
      skip();
      Mark m = mark();
      if (!accept('*')) return lhs;
      lhs = node(Expr::Kind::Mul, m, {lhs, unary()});
    }
  }

  ExprPtr unary() {
    skip();
    Mark m = mark();
    if (accept('-')) return node(Expr::Kind::Neg, m, {unary()});
    return primary();
  }

  std::string digits() {
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  std::string identifier() {
    std::string out;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  ExprPtr primary() {
    skip();
    Mark m = mark();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      advance();
      ExprPtr e = sum();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text = digits();
      if (accept('/')) {
        skip();
        std::string den = digits();
        if (den.empty()) fail("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) fail_at("zero denominator", m);
        text += "/" + den;
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->value = Rational::parse(text);
      e->line = m.line;
      e->column = m.column;
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return call(m);
    fail(std::string("unexpected '") + c + "'");
  }

  ExprPtr call(Mark m) {
    std::string name;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      name += src_[pos_];
      advance();
    }
    auto it = functions().find(name);
    if (it == functions().end()) fail_at("unknown identifier '" + name + "'", m);
    const Signature& sig = it->second;
    if (n_ == 0 && needs_queer(name)) fail_at("'" + name + "' needs the q(n) preset", m);
    if (n_ > 0 && name == "gen") fail_at("gen(name) is for the named presets; use e(i,j) and f(i,j) in q(n)", m);
    auto e = std::make_shared<Expr>();
    e->name = name;
    e->line = m.line;
    e->column = m.column;
    e->kind = name == "e" || name == "f" || name == "x" || name == "xi" ? Expr::Kind::Generator
              : name == "gen"                                           ? Expr::Kind::Named
                                                                        : Expr::Kind::Call;
    expect('(');
    for (std::size_t k = 0; k < sig.args.size(); ++k) {
      if (k > 0) expect(',');
      skip();
      Mark am = mark();
      switch (sig.args[k]) {
        case Arg::Expr:
          e->args.push_back(sum());
          break;
        case Arg::Name: {
          std::string id = identifier();
          if (id.empty()) fail("expected a generator name");
          named_ = id;
          break;
        }
        case Arg::Index: {
          std::string text = digits();
          if (text.empty()) fail("expected a non-negative integer");
          if (text.size() > 6) fail_at("index too large", am);
          int v = std::stoi(text);
          int lo = sig.minimum[k];
          if (v < lo) fail_at("index " + text + " must be at least " + std::to_string(lo), am);
          if (static_cast<int>(k) < sig.bounded && v > n_) {
            fail_at("index " + text + " out of range for n = " + std::to_string(n_), am);
          }
          e->indices.push_back(v);
          break;
        }
      }
    }
    skip();
    if (pos_ < src_.size() && src_[pos_] == ',') fail("too many arguments to '" + name + "'");
    expect(')');
    // for gen(...) the node keeps the preset generator name
    if (e->kind == Expr::Kind::Named) e->name = named_;
    return e;
  }

  std::string_view src_;
  int n_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::string named_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul: return 2;
    case Expr::Kind::Neg: return 3;
    default: return 4;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expression(std::string_view src, int n) { return Parser(src, n).parse(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.value.str();
    case Expr::Kind::Named: return "gen(" + e.name + ")";
    case Expr::Kind::Add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case Expr::Kind::Sub: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case Expr::Kind::Mul: return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case Expr::Kind::Neg: return "-" + wrap(*e.args[0], 3);
    case Expr::Kind::Generator:
    case Expr::Kind::Call: break;
  }
  std::string out = e.name + "(";
  bool first = true;
  for (int i : e.indices) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  for (const auto& a : e.args) {
    out += (first ? "" : ", ") + render(*a);
    first = false;
  }
  return out + ")";
}

// ---------------------------------------------------------------------------

std::string Value::str() const {
  switch (kind) {
    case Kind::Raw:
    case Kind::Reduced: return element.str();
    case Kind::Cartan: return cartan.str();
    case Kind::Scalar: return scalar.str();
  }
  return "";
}

Evaluator::Evaluator(WhittakerPtr w) : w_(std::move(w)) {}

SergeevCache& Evaluator::sergeev(const Expr& at) {
  if (!w_->algebra().is_queer()) throw ParseError("'" + at.name + "' needs the q(n) preset", at.line, at.column);
  if (!s_) s_ = std::make_unique<SergeevCache>(w_);
  return *s_;
}

Element Evaluator::as_element(const Value& v, const Expr& at) const {
  switch (v.kind) {
    case Value::Kind::Scalar: return w_->scalar(v.scalar);
    case Value::Kind::Raw:
    case Value::Kind::Reduced: return v.element;
    case Value::Kind::Cartan: break;
  }
  throw ParseError("expected an element of U(g)", at.line, at.column);
}

Value Evaluator::combine(const Expr& e, Value a, Value b) {
  const bool sub = e.kind == Expr::Kind::Sub;
  Value out;
  if (a.kind == Value::Kind::Scalar && b.kind == Value::Kind::Scalar) {
    out.kind = Value::Kind::Scalar;
    switch (e.kind) {
      case Expr::Kind::Add: out.scalar = a.scalar + b.scalar; break;
      case Expr::Kind::Sub: out.scalar = a.scalar - b.scalar; break;
      case Expr::Kind::Mul: out.scalar = a.scalar * b.scalar; break;
      default: out.scalar = 0; break;  // scalars supercommute
    }
    return out;
  }
  Value::Kind kind = a.kind == Value::Kind::Scalar ? b.kind : a.kind;
  Value::Kind other = a.kind == Value::Kind::Scalar ? a.kind : b.kind;
  if (other != Value::Kind::Scalar && other != kind) {
    throw ParseError("cannot combine an element of U(g) with a reduced one; apply pi(...) to both sides", e.line,
                     e.column);
  }
  out.kind = kind;
  if (kind == Value::Kind::Cartan) {
    int n = w_->n();
    auto lift = [&](const Value& v) { return v.kind == Value::Kind::Scalar ? CartanElement::scalar(n, v.scalar) : v.cartan; };
    CartanElement x = lift(a), y = lift(b);
    switch (e.kind) {
      case Expr::Kind::Add: out.cartan = x + y; break;
      case Expr::Kind::Sub: out.cartan = x - y; break;
      case Expr::Kind::Mul: out.cartan = x * y; break;
      default: out.cartan = cartan_supercommutator(x, y); break;
    }
    return out;
  }
  Element x = as_element(a, e), y = as_element(b, e);
  if (e.kind == Expr::Kind::Add || sub) {
    out.element = sub ? x - y : x + y;
  } else if (e.kind == Expr::Kind::Mul) {
    out.element = kind == Value::Kind::Reduced ? w_->product(x, y) : x * y;
  } else {
    out.element = kind == Value::Kind::Reduced ? w_->bracket(x, y) : supercommutator(x, y);
  }
  return out;
}

Value Evaluator::evaluate(const Expr& e) {
  Value out;
  switch (e.kind) {
    case Expr::Kind::Number:
      out.scalar = e.value;
      return out;
    case Expr::Kind::Named: {
      auto idx = w_->algebra().find(e.name);
      if (!idx) {
        std::string valid;
        for (const auto& g : w_->algebra().generators()) valid += (valid.empty() ? "" : ", ") + g.name;
        throw ParseError("unknown generator '" + e.name + "' (valid: " + valid + ")", e.line, e.column);
      }
      out.kind = Value::Kind::Raw;
      out.element = w_->generator(*idx);
      return out;
    }
    case Expr::Kind::Generator: {
      int n = w_->n();
      for (int i : e.indices)
        if (i > n) throw ParseError("index out of range for n = " + std::to_string(n), e.line, e.column);
      if (e.name == "x" || e.name == "xi") {
        out.kind = Value::Kind::Cartan;
        out.cartan = e.name == "x" ? CartanElement::x(n, e.indices[0]) : CartanElement::xi(n, e.indices[0]);
        return out;
      }
      out.kind = Value::Kind::Raw;
      GeneratorId id = e.name == "e" ? GeneratorId::E(e.indices[0], e.indices[1]) : GeneratorId::F(e.indices[0], e.indices[1]);
      out.element = w_->generator(id);
      return out;
    }
    case Expr::Kind::Neg: {
      Value v = evaluate(*e.args[0]);
      v.scalar = -v.scalar;
      v.element = -v.element;
      v.cartan = -v.cartan;
      return v;
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: return combine(e, evaluate(*e.args[0]), evaluate(*e.args[1]));
    case Expr::Kind::Call: return call(e);
  }
  return out;
}

Value Evaluator::call(const Expr& e) {
  Value out;
  const std::string& f = e.name;
  if (f == "sergeev_e" || f == "sergeev_f") {
    out.kind = Value::Kind::Raw;
    out.element = sergeev(e).raw(f == "sergeev_e" ? SergeevKind::Even : SergeevKind::Odd, e.indices[0], e.indices[1],
                                 e.indices[2]);
    return out;
  }
  if (f == "central") {
    out.kind = Value::Kind::Raw;
    out.element = sergeev(e).central_element(e.indices[0]);
    return out;
  }
  if (f == "phi") {
    SergeevCache& s = sergeev(e);
    int k = e.indices[0];
    if (static_cast<int>(phis_.size()) <= k) phis_ = phi_generators(s, k + 1);
    out.kind = Value::Kind::Reduced;
    out.element = phis_[static_cast<std::size_t>(k)];
    return out;
  }
  if (f == "bracket") return combine(e, evaluate(*e.args[0]), evaluate(*e.args[1]));
  const Expr& arg = *e.args[0];
  if (f == "pi") {
    out.kind = Value::Kind::Reduced;
    // reduced Sergeev elements come from their own recursion, never through U(g)
    if (arg.kind == Expr::Kind::Call && (arg.name == "sergeev_e" || arg.name == "sergeev_f")) {
      out.element = sergeev(arg).reduced(arg.name == "sergeev_e" ? SergeevKind::Even : SergeevKind::Odd, arg.indices[0],
                                         arg.indices[1], arg.indices[2]);
      return out;
    }
    if (arg.kind == Expr::Kind::Call && arg.name == "central") {
      out.element = sergeev(arg).reduced_central(arg.indices[0]);
      return out;
    }
    Value v = evaluate(arg);
    if (v.kind == Value::Kind::Cartan) throw ParseError("pi expects an element of U(g)", e.line, e.column);
    out.element = v.kind == Value::Kind::Reduced ? v.element : w_->reduce(as_element(v, e));
    return out;
  }
  Value v = evaluate(arg);
  if (f == "theta") {
    if (!w_->algebra().is_queer()) throw ParseError("theta needs the q(n) preset", e.line, e.column);
    out.kind = Value::Kind::Cartan;
    if (v.kind == Value::Kind::Scalar) {
      out.cartan = CartanElement::scalar(w_->n(), v.scalar);
    } else if (v.kind == Value::Kind::Reduced) {
      out.cartan = w_->theta(v.element);
    } else {
      throw ParseError("theta expects a reduced element; wrap the argument in pi(...)", e.line, e.column);
    }
    return out;
  }
  // top
  if (v.kind == Value::Kind::Cartan) throw ParseError("top expects an element of U(g)", e.line, e.column);
  if (v.kind == Value::Kind::Scalar) return v;
  out.kind = v.kind;
  out.element = w_->top_symbol(v.element);
  return out;
}

}  // namespace superw
