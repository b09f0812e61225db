#include "superw/whittaker.hpp"

#include <algorithm>

namespace superw {

namespace {

inline unsigned char letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

GeneratorOrder make_order(const AlgebraSpec& g, const std::vector<int>& left, const std::vector<int>& middle,
                          const std::vector<MGenerator>& m) {
  std::vector<int> seq(left);
  seq.insert(seq.end(), middle.begin(), middle.end());
  for (const auto& mg : m) seq.push_back(mg.generator);
  return GeneratorOrder(g, std::move(seq), static_cast<int>(left.size()), static_cast<int>(m.size()));
}

}  // namespace

WhittakerData::WhittakerData(AlgebraPtr g, std::vector<int> left, std::vector<int> middle,
                             std::vector<MGenerator> m)
    : m_(std::move(m)) {
  GeneratorOrder order = make_order(*g, left, middle, m_);
  ctx_ = make_context(std::move(g), std::move(order));
  int k = ctx_->rank_count();
  chi_by_rank_.assign(static_cast<std::size_t>(k), Rational());
  m_rank_.assign(static_cast<std::size_t>(k), false);
  for (const auto& mg : m_) {
    int r = ctx_->order().rank_of(mg.generator);
    m_rank_[static_cast<std::size_t>(r)] = true;
    chi_by_rank_[static_cast<std::size_t>(r)] = mg.chi;
    if (!mg.chi.is_zero() && algebra().parity(mg.generator) == Parity::Odd) {
      throw Error("the character must vanish on odd elements");
    }
  }
  for (int r = 0; r < k; ++r) {
    const Generator& gen = algebra().generator(ctx_->order().generator_at(r));
    kdeg_.push_back(gen.dynkin + 2);
    weight_.push_back(gen.dynkin);
  }
  // An odd complement generator of degree −1 pairing nontrivially with itself under χ.
  for (int gen = 0; gen < algebra().size(); ++gen) {
    if (in_m(gen) || algebra().parity(gen) != Parity::Odd || algebra().generator(gen).dynkin != -1) continue;
    Rational v;
    for (const auto& [z, c] : algebra().bracket(gen, gen)) v += c * chi(z);
    if (!v.is_zero()) {
      residual_ = gen;
      residual_chi_ = v;
    }
  }
}

std::shared_ptr<WhittakerData> WhittakerData::queer(int n) {
  AlgebraPtr g = build_preset("q", n);
  std::vector<int> left, middle;
  std::vector<MGenerator> m;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      left.push_back(g->index_of(GeneratorId::E(i, j)));
      left.push_back(g->index_of(GeneratorId::F(i, j)));
    }
  for (int i = 1; i <= n; ++i) {
    middle.push_back(g->index_of(GeneratorId::E(i, i)));
    middle.push_back(g->index_of(GeneratorId::F(i, i)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j) {
      m.push_back({g->index_of(GeneratorId::E(i, j)), Rational(i == j + 1 ? 1 : 0)});
      m.push_back({g->index_of(GeneratorId::F(i, j)), Rational(0)});
    }
  return std::make_shared<WhittakerData>(std::move(g), std::move(left), std::move(middle), std::move(m));
}

std::shared_ptr<WhittakerData> WhittakerData::osp12() {
  AlgebraPtr g = build_preset("osp12");
  auto idx = [&](const char* name) { return *g->find(name); };
  std::vector<int> middle = {idx("X"), idx("r"), idx("H"), idx("theta")};
  std::vector<MGenerator> m = {{idx("Y"), Rational(-1, 2)}};
  return std::make_shared<WhittakerData>(std::move(g), std::vector<int>{}, std::move(middle), std::move(m));
}

std::shared_ptr<WhittakerData> WhittakerData::sl12() {
  AlgebraPtr g = build_preset("sl12");
  auto idx = [&](const char* name) { return *g->find(name); };
  std::vector<int> middle = {idx("e"), idx("ep"), idx("fp"), idx("h1"), idx("h2"), idx("em"), idx("fm")};
  std::vector<MGenerator> m = {{idx("f"), Rational(1)}};
  return std::make_shared<WhittakerData>(std::move(g), std::vector<int>{}, std::move(middle), std::move(m));
}

std::shared_ptr<WhittakerData> WhittakerData::for_preset(const std::string& name, std::optional<int> n) {
  if (name == "q") {
    if (!n) throw Error("preset q requires n");
    if (*n < 1) throw Error("n must be at least 1");
    return queer(*n);
  }
  if (n) throw Error("preset " + name + " does not take n");
  if (name == "osp12") return osp12();
  if (name == "sl12") return sl12();
  throw Error("unknown preset '" + name + "' (valid: q, osp12, sl12)");
}

bool WhittakerData::in_m(int generator) const {
  return m_rank_[static_cast<std::size_t>(ctx_->order().rank_of(generator))];
}

Rational WhittakerData::chi(int generator) const {
  return chi_by_rank_[static_cast<std::size_t>(ctx_->order().rank_of(generator))];
}

bool WhittakerData::chi_vanishes_on_brackets() const {
  for (const auto& a : m_)
    for (const auto& b : m_) {
      Rational v;
      for (const auto& [z, c] : algebra().bracket(a.generator, b.generator)) v += c * chi(z);
      if (!v.is_zero()) return false;
    }
  return true;
}

bool WhittakerData::is_reduced(const Element& y) const {
  if (y.context() && y.context() != ctx_) return false;
  for (const auto& [w, c] : y.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (m_rank_[letter(w, i)]) return false;
    }
  }
  return true;
}

void WhittakerData::clear_cache() {
  cache_.clear();
  cache_terms_ = 0;
  ctx_->clear_cache();
}

// Normal words keep the m-block at the right end.
void WhittakerData::strip_into(Terms& acc, const Word& w, const Rational& c) const {
  std::size_t end = w.size();
  Rational coef = c;
  while (end > 0 && m_rank_[letter(w, end - 1)]) {
    coef *= chi_by_rank_[letter(w, end - 1)];
    if (coef.is_zero()) return;
    --end;
  }
  add_term(acc, end == w.size() ? w : w.substr(0, end), coef);
}

void WhittakerData::multiply_into(Terms& acc, int rank, const Terms& y, const Rational& c) {
  for (const auto& [w, cw] : y) {
    auto res = act_word(rank, w);
    for (const auto& [t, ct] : *res) add_term(acc, t, c * cw * ct);
  }
}

// π(g·w) for a reduced word w:
//   g ∉ m: straighten and strip;
//   g ∈ m: g y rest = ±y (g rest) + [g,y] rest, recursing on the shorter word.
std::shared_ptr<const TermList> WhittakerData::act_word(int g, const Word& w) {
  std::string key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<char>(g));
  key.append(w);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Terms acc;
  if (!m_rank_[static_cast<std::size_t>(g)]) {
    auto prod = ctx_->left_multiply(g, w);
    for (const auto& [t, ct] : *prod) strip_into(acc, t, ct);
  } else if (w.empty()) {
    add_term(acc, Word(), chi_by_rank_[static_cast<std::size_t>(g)]);
  } else {
    int y = letter(w, 0);
    Word rest = w.substr(1);
    auto inner = act_word(g, rest);
    Rational sign = (ctx_->odd(g) && ctx_->odd(y)) ? -1 : 1;
    for (const auto& [t, ct] : *inner) {
      auto res = act_word(y, t);
      for (const auto& [u, cu] : *res) add_term(acc, u, sign * ct * cu);
    }
    for (const auto& [z, cz] : ctx_->bracket_ranks(g, y)) {
      auto res = act_word(z, rest);
      for (const auto& [u, cu] : *res) add_term(acc, u, cz * cu);
    }
  }
  auto out = std::make_shared<const TermList>(acc.begin(), acc.end());
  if (cache_terms_ + out->size() > budget_) {
    cache_.clear();
    cache_terms_ = 0;
  }
  cache_terms_ += out->size() + 1;
  cache_.emplace(std::move(key), out);
  return out;
}

Element WhittakerData::act(int generator, const Element& y) {
  if (!is_reduced(y)) throw Error("act expects a reduced element");
  Terms acc;
  multiply_into(acc, ctx_->order().rank_of(generator), y.terms(), Rational(1));
  return Element(ctx_, std::move(acc));
}

Element WhittakerData::reduce(const Element& a) {
  if (!a.context()) return zero();
  if (a.context()->algebra_ptr() != ctx_->algebra_ptr()) throw Error("element belongs to another algebra");
  Terms acc;
  if (a.context() == ctx_) {
    for (const auto& [w, c] : a.terms()) strip_into(acc, w, c);
    return Element(ctx_, std::move(acc));
  }
  const GeneratorOrder& src = a.context()->order();
  for (const auto& [w, c] : a.terms()) {
    Terms cur;
    cur.emplace(Word(), c);
    for (std::size_t i = w.size(); i-- > 0;) {
      Terms next;
      multiply_into(next, ctx_->order().rank_of(src.generator_at(letter(w, i))), cur, Rational(1));
      cur = std::move(next);
    }
    for (const auto& [t, ct] : cur) add_term(acc, t, ct);
  }
  return Element(ctx_, std::move(acc));
}

Element WhittakerData::product(const Element& a, const Element& b) {
  Element p = multiply(a, b);
  if (p.context() && p.context() != ctx_) throw Error("product expects reduced elements");
  return reduce(p);
}

Element WhittakerData::bracket(const Element& a, const Element& b) {
  Element p = supercommutator(a, b);
  if (p.context() && p.context() != ctx_) throw Error("bracket expects reduced elements");
  return reduce(p);
}

// π([a,y]) = π(a y) − (−1)^{p(a)p(y)} π(y a), and π(y a) = χ(a) y.
Element WhittakerData::m_action(int generator, const Element& y) {
  if (!in_m(generator)) throw Error("m_action expects an m-generator");
  Element out = act(generator, y);
  Rational c = chi(generator);
  if (!c.is_zero()) out -= y * c;
  return out;
}

bool WhittakerData::is_whittaker(const Element& y) {
  if (!is_reduced(y)) return false;
  for (const auto& mg : m_) {
    if (!m_action(mg.generator, y).is_zero()) return false;
  }
  return true;
}

std::optional<WElement> WhittakerData::certify(std::string name, const Element& y) {
  if (!is_whittaker(y)) return std::nullopt;
  return WElement(std::move(name), y);
}

int WhittakerData::word_degree(const Word& w) const {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += kdeg_[letter(w, i)];
  return d;
}

int WhittakerData::word_weight(const Word& w) const {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += weight_[letter(w, i)];
  return d;
}

int WhittakerData::kazhdan_degree(const Element& y) const {
  if (y.is_zero()) throw Error("Kazhdan degree of zero is undefined");
  int d = 0;
  for (const auto& [w, c] : y.terms()) d = std::max(d, word_degree(w));
  return d;
}

Element WhittakerData::top_symbol(const Element& y) const {
  int d = kazhdan_degree(y);
  int best = 0;
  bool found = false;
  for (const auto& [w, c] : y.terms()) {
    if (word_degree(w) != d) continue;
    int wt = word_weight(w);
    if (!found || wt > best) best = wt;
    found = true;
  }
  Terms t;
  for (const auto& [w, c] : y.terms()) {
    if (word_degree(w) == d && word_weight(w) == best) t.emplace(w, c);
  }
  return Element(y.context(), std::move(t));
}

CartanElement WhittakerData::theta(const Element& y) const {
  if (!algebra().is_queer()) throw Error("theta is defined for the q(n) preset only");
  if (y.context() && y.context() != ctx_) throw Error("theta expects a reduced element");
  int n = algebra().n();
  const GeneratorOrder& ord = ctx_->order();
  std::vector<int> diag(static_cast<std::size_t>(ctx_->rank_count()), -1);
  std::vector<bool> odd(static_cast<std::size_t>(ctx_->rank_count()), false);
  for (int r = ord.left_block(); r < ctx_->rank_count(); ++r) {
    const Generator& gen = algebra().generator(ord.generator_at(r));
    if (gen.id.row == gen.id.col) {
      diag[static_cast<std::size_t>(r)] = gen.id.row - 1;
      odd[static_cast<std::size_t>(r)] = gen.id.family == Family::F;
    }
  }
  std::map<CartanElement::Mask, Polynomial> parts;
  for (const auto& [w, c] : y.terms()) {
    bool killed = false;
    PackedExp exp = 0;
    CartanElement::Mask mask = 0;
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int r = letter(w, i);
      if (ord.in_left(r)) {
        killed = true;
        break;
      }
      if (m_rank_[static_cast<std::size_t>(r)]) throw Error("theta: support outside U(b)");
      int idx = diag[static_cast<std::size_t>(r)];
      if (!odd[static_cast<std::size_t>(r)]) {
        exp += unit_exponent(idx);
        continue;
      }
      // f_ii = (−1)^{i+1} ξ_i with i = idx + 1
      if (idx % 2 == 1) sign = -sign;
      CartanElement::Mask bitv = CartanElement::Mask{1} << idx;
      sign *= clifford_sign(mask, bitv);
      if (mask & bitv) exp += unit_exponent(idx);
      mask ^= bitv;
    }
    if (killed) continue;
    auto it = parts.try_emplace(mask, Polynomial(n)).first;
    it->second.add_term(exp, sign > 0 ? c : -c);
  }
  CartanElement out(n);
  for (const auto& [mask, p] : parts) out.add(mask, p);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("invariant form is degenerate");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

Element casimir(const ContextPtr& ctx) {
  const AlgebraSpec& g = ctx->algebra();
  if (!g.form()) throw Error("algebra has no invariant form");
  auto inv = invert(*g.form());
  int n = g.size();
  Element out(ctx);
  // x^j = Σ_k (G^{-1})_{kj} x_k satisfies (x_i | x^j) = δ_ij
  for (int j = 0; j < n; ++j) {
    Element dual(ctx);
    for (int k = 0; k < n; ++k) {
      const Rational& c = inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (!c.is_zero()) dual += Element::generator(ctx, k) * c;
    }
    out += dual * Element::generator(ctx, j);
  }
  return out;
}

}  // namespace superw
