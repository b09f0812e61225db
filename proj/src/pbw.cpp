#include "superw/pbw.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace superw {

// ---------------------------------------------------------------------------
// GeneratorOrder
// ---------------------------------------------------------------------------

GeneratorOrder::GeneratorOrder(const AlgebraSpec& g, std::vector<int> sequence, int left, int right)
    : sequence_(std::move(sequence)), left_(left), right_(right) {
  if (static_cast<int>(sequence_.size()) != g.size()) {
    throw Error("generator order must list every generator exactly once");
  }
  if (g.size() > 250) throw Error("too many generators for the word encoding");
  rank_.assign(sequence_.size(), -1);
  for (std::size_t r = 0; r < sequence_.size(); ++r) {
    int gen = sequence_[r];
    if (gen < 0 || gen >= g.size() || rank_[static_cast<std::size_t>(gen)] != -1) {
      throw Error("generator order must list every generator exactly once");
    }
    rank_[static_cast<std::size_t>(gen)] = static_cast<int>(r);
  }
  if (left < 0 || right < 0 || left + right > g.size()) throw Error("invalid block sizes");
}

GeneratorOrder GeneratorOrder::natural(const AlgebraSpec& g) {
  std::vector<int> seq(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) seq[static_cast<std::size_t>(i)] = i;
  return GeneratorOrder(g, std::move(seq));
}

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

void add_term(Terms& acc, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

inline unsigned char letter(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

}  // namespace

// ---------------------------------------------------------------------------
// PbwContext
// ---------------------------------------------------------------------------

PbwContext::PbwContext(AlgebraPtr algebra, GeneratorOrder order)
    : algebra_(std::move(algebra)), order_(std::move(order)) {
  if (order_.size() != algebra_->size()) throw Error("order does not cover the algebra");
  int k = rank_count();
  parity_.resize(static_cast<std::size_t>(k));
  bracket_.resize(static_cast<std::size_t>(k * k));
  for (int a = 0; a < k; ++a) {
    parity_[static_cast<std::size_t>(a)] = algebra_->parity(order_.generator_at(a));
    for (int b = 0; b < k; ++b) {
      auto& out = bracket_[static_cast<std::size_t>(a * k + b)];
      for (const auto& [gen, c] : algebra_->bracket(order_.generator_at(a), order_.generator_at(b))) {
        out.emplace_back(order_.rank_of(gen), c);
      }
    }
  }
}

Parity PbwContext::parity(const Word& w) const {
  int p = 0;
  for (std::size_t i = 0; i < w.size(); ++i) p ^= bit(parity_[letter(w, i)]);
  return static_cast<Parity>(p);
}

std::vector<std::pair<int, int>> PbwContext::factors(const Word& w) const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int gen = order_.generator_at(letter(w, i));
    if (!out.empty() && out.back().first == gen) {
      ++out.back().second;
    } else {
      out.emplace_back(gen, 1);
    }
  }
  return out;
}

Word PbwContext::word_from_generators(const std::vector<int>& gens_sorted) const {
  Word w;
  for (int g : gens_sorted) w.push_back(static_cast<char>(order_.rank_of(g)));
  return w;
}

void PbwContext::clear_cache() {
  cache_.clear();
  cache_terms_ = 0;
}

void PbwContext::left_multiply_into(Terms& acc, int g, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  if (w.empty() || g < letter(w, 0) || (g == letter(w, 0) && !odd(g))) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(static_cast<char>(g));
    out.append(w);
    add_term(acc, out, c);
    return;
  }
  auto res = swap(g, w);
  for (const auto& [t, ct] : *res) add_term(acc, t, c * ct);
}

void PbwContext::left_multiply_into(Terms& acc, int g, const Terms& terms, const Rational& c) {
  for (const auto& [w, cw] : terms) left_multiply_into(acc, g, w, c * cw);
}

std::shared_ptr<const TermList> PbwContext::left_multiply(int g, const Word& w) {
  if (w.empty() || g < letter(w, 0) || (g == letter(w, 0) && !odd(g))) {
    Word out(1, static_cast<char>(g));
    out.append(w);
    return std::make_shared<const TermList>(TermList{{out, Rational(1)}});
  }
  return swap(g, w);
}

// g * y * rest with g >= y (equality only for odd y):
//   g y = (-1)^{p(g)p(y)} y g + [g,y]  and for odd g, g g = 1/2 [g,g].
std::shared_ptr<const TermList> PbwContext::swap(int g, const Word& w) {
  std::string key;
  key.reserve(w.size() + 1);
  key.push_back(static_cast<char>(g));
  key.append(w);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  int y = letter(w, 0);
  Word rest = w.substr(1);
  Terms acc;
  if (g == y) {
    for (const auto& [z, cz] : bracket_ranks(g, g)) left_multiply_into(acc, z, rest, cz / 2);
  } else {
    Terms inner;
    left_multiply_into(inner, g, rest, Rational(1));
    Rational sign = (odd(g) && odd(y)) ? -1 : 1;
    left_multiply_into(acc, y, inner, sign);
    for (const auto& [z, cz] : bracket_ranks(g, y)) left_multiply_into(acc, z, rest, cz);
  }
  auto out = std::make_shared<TermList>(acc.begin(), acc.end());
  if (cache_terms_ + out->size() > budget_) clear_cache();
  cache_terms_ += out->size() + 1;
  cache_.emplace(std::move(key), out);
  return out;
}

Terms PbwContext::straighten(const std::vector<int>& ranks) {
  Terms cur;
  cur.emplace(Word(), Rational(1));
  for (auto it = ranks.rbegin(); it != ranks.rend(); ++it) {
    Terms next;
    left_multiply_into(next, *it, cur);
    cur = std::move(next);
  }
  return cur;
}

ContextPtr make_context(AlgebraPtr algebra, GeneratorOrder order) {
  return std::make_shared<PbwContext>(std::move(algebra), std::move(order));
}

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

Element::Element(ContextPtr ctx, Terms terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

Element Element::scalar(ContextPtr ctx, const Rational& c) {
  Element e(std::move(ctx));
  add_term(e.terms_, Word(), c);
  return e;
}

Element Element::generator(ContextPtr ctx, int generator_index) {
  Element e(ctx);
  e.terms_.emplace(Word(1, static_cast<char>(ctx->order().rank_of(generator_index))), Rational(1));
  return e;
}

Element Element::generator(ContextPtr ctx, const GeneratorId& id) {
  int index = ctx->algebra().index_of(id);
  return generator(std::move(ctx), index);
}

Element Element::from_combination(ContextPtr ctx, const Combination& c) {
  Element e(ctx);
  for (const auto& [gen, v] : c) {
    add_term(e.terms_, Word(1, static_cast<char>(ctx->order().rank_of(gen))), v);
  }
  return e;
}

Element Element::from_word(ContextPtr ctx, const std::vector<int>& generator_indices) {
  std::vector<int> ranks;
  ranks.reserve(generator_indices.size());
  for (int g : generator_indices) ranks.push_back(ctx->order().rank_of(g));
  Terms t = ctx->straighten(ranks);
  return Element(std::move(ctx), std::move(t));
}

Rational Element::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational() : it->second;
}

TermList Element::sorted_terms() const {
  TermList out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  return out;
}

Element Element::part(Parity p) const {
  Element e(ctx_);
  for (const auto& [w, c] : terms_) {
    if (ctx_->parity(w) == p) e.terms_.emplace(w, c);
  }
  return e;
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  Parity p = ctx_->parity(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return ctx_->parity(t.first) == p; });
}

Parity Element::parity() const {
  if (terms_.empty()) return Parity::Even;
  if (!is_homogeneous()) throw Error("element is not parity-homogeneous");
  return ctx_->parity(terms_.begin()->first);
}

void Element::check_same(const Element& o) const {
  if (ctx_ && o.ctx_ && ctx_ != o.ctx_) throw Error("elements live in different contexts");
}

Element& Element::operator+=(const Element& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(o);
  if (!ctx_) ctx_ = o.ctx_;
  for (const auto& [w, c] : o.terms_) add_term(terms_, w, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element e(*this);
  for (auto& [w, v] : e.terms_) v = -v;
  return e;
}

Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

bool operator==(const Element& a, const Element& b) {
  if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string Element::str() const {
  if (!ctx_) return "0";
  return render_terms(*ctx_, sorted_terms());
}

Element multiply(const Element& a, const Element& b) {
  a.check_same(b);
  ContextPtr ctx = a.context() ? a.context() : b.context();
  if (a.is_zero() || b.is_zero()) return Element(ctx);
  // Words of a sorted by their reversal, so that words sharing a suffix are
  // adjacent and (suffix)·b is computed once per distinct suffix.
  std::vector<std::pair<Word, Rational>> left;
  left.reserve(a.terms().size());
  for (const auto& [u, cu] : a.terms()) left.emplace_back(Word(u.rbegin(), u.rend()), cu);
  std::sort(left.begin(), left.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Terms acc;
  std::function<void(std::size_t, std::size_t, std::size_t, const Terms&)> walk =
      [&](std::size_t lo, std::size_t hi, std::size_t depth, const Terms& cur) {
        while (lo < hi && left[lo].first.size() == depth) {
          for (const auto& [w, cw] : cur) add_term(acc, w, left[lo].second * cw);
          ++lo;
        }
        while (lo < hi) {
          char x = left[lo].first[depth];
          std::size_t end = lo;
          while (end < hi && left[end].first[depth] == x) ++end;
          Terms next;
          ctx->left_multiply_into(next, static_cast<unsigned char>(x), cur);
          walk(lo, end, depth + 1, next);
          lo = end;
        }
      };
  walk(0, left.size(), 0, b.terms());
  return Element(ctx, std::move(acc));
}

Element supercommutator(const Element& a, const Element& b) {
  a.check_same(b);
  ContextPtr ctx = a.context() ? a.context() : b.context();
  Element out(ctx);
  for (Parity pa : {Parity::Even, Parity::Odd}) {
    Element ap = a.part(pa);
    if (ap.is_zero()) continue;
    for (Parity pb : {Parity::Even, Parity::Odd}) {
      Element bp = b.part(pb);
      if (bp.is_zero()) continue;
      Element ab = multiply(ap, bp);
      Element ba = multiply(bp, ap);
      if (bit(pa) * bit(pb) == 1) {
        out += ab + ba;
      } else {
        out += ab - ba;
      }
    }
  }
  return out;
}

Element restraighten(const Element& a, const ContextPtr& target) {
  if (!a.context()) return Element(target);
  if (a.context()->algebra_ptr() != target->algebra_ptr()) {
    throw Error("target order belongs to another algebra");
  }
  Terms acc;
  for (const auto& [w, c] : a.terms()) {
    std::vector<int> ranks;
    ranks.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      ranks.push_back(target->order().rank_of(a.context()->order().generator_at(letter(w, i))));
    }
    for (const auto& [t, ct] : target->straighten(ranks)) add_term(acc, t, c * ct);
  }
  return Element(target, std::move(acc));
}

std::string render_word(const PbwContext& ctx, const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [gen, e] : ctx.factors(w)) {
    if (!first) os << "*";
    const Generator& g = ctx.algebra().generator(gen);
    if (g.id.family == Family::Named) {
      os << "gen(" << g.name << ")";
    } else {
      os << g.name;
    }
    if (e > 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

std::string render_terms(const PbwContext& ctx, const TermList& sorted) {
  if (sorted.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : sorted) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (w.empty()) {
      os << mag;
    } else {
      if (!mag.is_one()) os << mag << "*";
      os << render_word(ctx, w);
    }
    first = false;
  }
  return os.str();
}

}  // namespace superw
