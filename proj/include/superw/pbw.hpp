#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superw/algebra.hpp"

namespace superw {

/// Total order on the generators of an algebra, with a marked left block
/// (the first `left` ranks) and right block (the last `right` ranks).
class GeneratorOrder {
 public:
  GeneratorOrder(const AlgebraSpec& g, std::vector<int> sequence, int left = 0, int right = 0);
  static GeneratorOrder natural(const AlgebraSpec& g);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int generator_at(int rank) const { return sequence_[static_cast<std::size_t>(rank)]; }
  int rank_of(int generator) const { return rank_[static_cast<std::size_t>(generator)]; }
  int left_block() const { return left_; }
  int right_block() const { return right_; }
  bool in_left(int rank) const { return rank < left_; }
  bool in_right(int rank) const { return rank >= size() - right_; }

  friend bool operator==(const GeneratorOrder& a, const GeneratorOrder& b) {
    return a.sequence_ == b.sequence_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  std::vector<int> sequence_;
  std::vector<int> rank_;
  int left_ = 0;
  int right_ = 0;
};

/// An ordered PBW monomial stored as its sequence of generator ranks
/// (non-decreasing; odd ranks occur at most once). The empty word is 1.
using Word = std::string;

using Terms = std::unordered_map<Word, Rational>;
using TermList = std::vector<std::pair<Word, Rational>>;

void add_term(Terms& acc, const Word& w, const Rational& c);

/// Length-lexicographic comparison of words.
bool word_less(const Word& a, const Word& b);

/// Straightening engine for U(g) in a fixed generator order.
///
/// Holds a memo of left multiplications by single generators. The memo is
/// bounded and cleared when it grows past its budget. A context is meant to
/// be used by one task at a time.
class PbwContext {
 public:
  PbwContext(AlgebraPtr algebra, GeneratorOrder order);

  const AlgebraSpec& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const GeneratorOrder& order() const { return order_; }
  int rank_count() const { return order_.size(); }

  Parity parity_of_rank(int r) const { return parity_[static_cast<std::size_t>(r)]; }
  bool odd(int r) const { return parity_[static_cast<std::size_t>(r)] == Parity::Odd; }
  /// Bracket of two ranks expressed in ranks.
  const std::vector<std::pair<int, Rational>>& bracket_ranks(int a, int b) const {
    return bracket_[static_cast<std::size_t>(a * rank_count() + b)];
  }

  Parity parity(const Word& w) const;
  /// (generator index, exponent) pairs of a word in rank order.
  std::vector<std::pair<int, int>> factors(const Word& w) const;
  Word word_from_generators(const std::vector<int>& gens_sorted) const;

  /// g * w in normal form, for a generator rank g and a normal word w.
  std::shared_ptr<const TermList> left_multiply(int g, const Word& w);
  /// Adds c * g * w into acc.
  void left_multiply_into(Terms& acc, int g, const Word& w, const Rational& c);
  /// Adds c * g * (terms) into acc.
  void left_multiply_into(Terms& acc, int g, const Terms& terms, const Rational& c = 1);
  /// Normal form of an arbitrary product of generator ranks.
  Terms straighten(const std::vector<int>& ranks);

  std::size_t cache_terms() const { return cache_terms_; }
  void set_cache_budget(std::size_t terms) { budget_ = terms; }
  void clear_cache();

 private:
  AlgebraPtr algebra_;
  GeneratorOrder order_;
  std::vector<Parity> parity_;
  std::vector<std::vector<std::pair<int, Rational>>> bracket_;
  std::shared_ptr<const TermList> swap(int g, const Word& w);

  std::unordered_map<std::string, std::shared_ptr<const TermList>> cache_;
  std::size_t cache_terms_ = 0;
  std::size_t budget_ = 4'000'000;
};

using ContextPtr = std::shared_ptr<PbwContext>;

ContextPtr make_context(AlgebraPtr algebra, GeneratorOrder order);

/// Element of U(g): exact linear combination of normal words in one context.
class Element {
 public:
  Element() = default;
  explicit Element(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  Element(ContextPtr ctx, Terms terms);

  static Element scalar(ContextPtr ctx, const Rational& c);
  static Element generator(ContextPtr ctx, int generator_index);
  static Element generator(ContextPtr ctx, const GeneratorId& id);
  static Element from_combination(ContextPtr ctx, const Combination& c);
  /// Normal form of the product of the given generator indices, in order.
  static Element from_word(ContextPtr ctx, const std::vector<int>& generator_indices);

  const ContextPtr& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  Terms& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  /// Terms sorted by decreasing length-lex order of words.
  TermList sorted_terms() const;

  /// Parity component (words of the given parity).
  Element part(Parity p) const;
  bool is_homogeneous() const;
  /// Parity of a nonzero homogeneous element.
  Parity parity() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  Element operator-() const;

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  /// Rendering in the expression grammar, e.g. "e(1,2)*e(2,1) - e(1,1) + e(2,2)".
  std::string str() const;

  /// Throws unless both elements share a context (or one has none).
  void check_same(const Element& o) const;

 private:
  ContextPtr ctx_;
  Terms terms_;
};

Element multiply(const Element& a, const Element& b);
/// [a,b] = ab - (-1)^{p(a)p(b)} ba, applied per parity component.
Element supercommutator(const Element& a, const Element& b);
/// The same element of U(g) expressed in another context (order).
Element restraighten(const Element& a, const ContextPtr& target);

std::string render_word(const PbwContext& ctx, const Word& w);
std::string render_terms(const PbwContext& ctx, const TermList& sorted);

}  // namespace superw
