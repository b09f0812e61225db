#include "superw/yangian.hpp"

#include <set>

namespace superw {

namespace {

int p(int index) { return index < 0 ? 1 : 0; }

Rational sign_of(int exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

void check_index(int x) {
  if (x != 1 && x != -1) throw Error("Y(Q(1)) indices must be +1 or -1");
}

std::pair<Rational, std::optional<YGenerator>> canonical(const YGenerator& g, bool flip_symmetry) {
  check_index(g.i);
  check_index(g.j);
  if (g.level < 0) throw Error("Yangian level must be non-negative");
  if (g.level == 0) return {Rational(g.i == g.j ? 1 : 0), std::nullopt};
  if (g.j > 0) return {Rational(1), g};
  Rational s = sign_of(g.level);
  if (flip_symmetry) s = -s;
  return {s, YGenerator{-g.i, -g.j, g.level}};
}

class Builder {
 public:
  explicit Builder(int flip) : flip_(flip) {}

  Rational slot(int index, const Rational& value) const { return index == flip_ ? -value : value; }

  void product(YExpression& e, const Rational& c, const YGenerator& a, const YGenerator& b) const {
    auto [ca, ga] = canonical(a, flip_ == 11);
    auto [cb, gb] = canonical(b, flip_ == 11);
    Rational coef = c * ca * cb;
    if (coef.is_zero()) return;
    YMonomial mono;
    if (ga) mono.push_back(*ga);
    if (gb) mono.push_back(*gb);
    Rational& v = e[mono];
    v += coef;
    if (v.is_zero()) e.erase(mono);
  }

  void bracket(YExpression& e, const Rational& c, const YGenerator& a, const YGenerator& b) const {
    product(e, c, a, b);
    product(e, a.parity() * b.parity() == 1 ? c : -c, b, a);
  }

 private:
  int flip_;
};

}  // namespace

std::string YGenerator::str() const {
  return "T[" + std::to_string(i) + "," + std::to_string(j) + "](" + std::to_string(level) + ")";
}

std::string render(const YExpression& e) {
  if (e.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : e) {
    std::string body;
    for (const auto& g : mono) body += (body.empty() ? "" : "*") + g.str();
    Rational a = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (body.empty()) {
      out += a.str();
    } else {
      if (!a.is_one()) out += a.str() + "*";
      out += body;
    }
  }
  return out;
}

std::pair<Rational, std::optional<YGenerator>> canonicalize(const YGenerator& g) { return canonical(g, false); }

std::string YRelationInstance::label() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) +
         "; m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")";
}

YRelationInstance instantiate(int i, int j, int k, int l, int m, int r, int flip) {
  for (int x : {i, j, k, l}) check_index(x);
  if (m < 1 || r < 1) throw Error("relation levels must be at least 1");
  Builder b(flip);
  YRelationInstance inst{i, j, k, l, m, r, {}, {}};
  auto T = [](int a, int c, int level) { return YGenerator{a, c, level}; };

  Rational s = b.slot(0, sign_of(p(i) * p(k) + p(i) * p(l) + p(k) * p(l)));
  b.bracket(inst.lhs, s, T(i, j, m + 1), T(k, l, r - 1));
  b.bracket(inst.lhs, s * b.slot(1, Rational(-1)), T(i, j, m - 1), T(k, l, r + 1));

  b.product(inst.rhs, b.slot(2, Rational(1)), T(k, j, m), T(i, l, r - 1));
  b.product(inst.rhs, b.slot(3, Rational(1)), T(k, j, m - 1), T(i, l, r));
  b.product(inst.rhs, b.slot(4, Rational(-1)), T(k, j, r - 1), T(i, l, m));
  b.product(inst.rhs, b.slot(5, Rational(-1)), T(k, j, r), T(i, l, m - 1));

  Rational q = b.slot(6, sign_of(p(k) + p(l)));
  b.product(inst.rhs, q * b.slot(7, Rational(-1)), T(-k, j, m), T(-i, l, r - 1));
  b.product(inst.rhs, q * b.slot(8, Rational(1)), T(-k, j, m - 1), T(-i, l, r));
  b.product(inst.rhs, q * b.slot(9, Rational(1)), T(k, -j, r - 1), T(i, -l, m));
  b.product(inst.rhs, q * b.slot(10, Rational(-1)), T(k, -j, r), T(i, -l, m - 1));
  return inst;
}

RelationList enumerate_relations(int max_level, int flip) {
  if (max_level < 1) throw Error("max_level must be at least 1");
  RelationList out;
  std::set<std::string> seen;
  for (int m = 1; m <= max_level; ++m)
    for (int r = 1; r <= max_level; ++r)
      for (int i : {1, -1})
        for (int j : {1, -1})
          for (int k : {1, -1})
            for (int l : {1, -1}) {
              ++out.raw_count;
              YRelationInstance inst = instantiate(i, j, k, l, m, r, flip);
              if (seen.insert(render(inst.lhs) + " = " + render(inst.rhs)).second) {
                out.instances.push_back(std::move(inst));
              }
            }
  return out;
}

const Element& YangianMap::canonical_image(const YGenerator& g) {
  if (auto it = images_.find(g); it != images_.end()) return it->second;
  int n = s_.n();
  SergeevKind kind = g.i > 0 ? SergeevKind::Even : SergeevKind::Odd;
  Element v = s_.reduced(kind, n, 1, n + g.level - 1) * sign_of(g.level);
  return images_.emplace(g, std::move(v)).first->second;
}

Element YangianMap::image(const YGenerator& g) {
  auto [c, gen] = canonicalize(g);
  WhittakerData& w = s_.whittaker();
  if (!gen) return w.scalar(c);
  return canonical_image(*gen) * c;
}

Element YangianMap::evaluate(const YExpression& e) {
  WhittakerData& w = s_.whittaker();
  Element out = w.zero();
  for (const auto& [mono, c] : e) {
    if (mono.empty()) {
      out += w.scalar(c);
    } else if (mono.size() == 1) {
      out += canonical_image(mono[0]) * c;
    } else {
      auto key = std::make_pair(mono[0], mono[1]);
      auto it = products_.find(key);
      if (it == products_.end()) {
        it = products_.emplace(key, w.product(canonical_image(mono[0]), canonical_image(mono[1]))).first;
      }
      out += it->second * c;
    }
  }
  return out;
}

YangianMap::Result YangianMap::check(const YRelationInstance& inst) {
  Element lhs = evaluate(inst.lhs), rhs = evaluate(inst.rhs);
  bool pass = lhs == rhs;
  return {pass, std::move(lhs), std::move(rhs)};
}

}  // namespace superw
