#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superw/cartan.hpp"
#include "superw/pbw.hpp"

namespace superw {

/// A generator of m with its character value.
struct MGenerator {
  int generator;
  Rational chi;
};

/// Member of W_χ; only WhittakerData::certify creates one.
class WElement {
 public:
  const std::string& name() const { return name_; }
  const Element& value() const { return value_; }

 private:
  friend class WhittakerData;
  WElement(std::string name, Element value) : name_(std::move(name)), value_(std::move(value)) {}
  std::string name_;
  Element value_;
};

/// χ, m and the reduction machinery for U(g)/I_χ.
///
/// Reduced elements are stored in a single context whose order puts the left
/// block (nilradical n for q(n)) first, then the rest of the complement, then
/// m. Reduction memoizes π(g·w) for generators g and reduced words w; the memo
/// is bounded and the object is meant to be used by one task at a time.
class WhittakerData {
 public:
  WhittakerData(AlgebraPtr g, std::vector<int> left, std::vector<int> middle, std::vector<MGenerator> m);

  /// q(n) with χ(e_{i+1,i}) = 1, m = span{e_ij, f_ij : i > j}, complement b.
  static std::shared_ptr<WhittakerData> queer(int n);
  /// osp(1|2) with m = <Y>, χ(Y) = −1/2 and θ kept in the complement.
  static std::shared_ptr<WhittakerData> osp12();
  /// sl(1|2) with m = <f>, χ(f) = 1.
  static std::shared_ptr<WhittakerData> sl12();
  static std::shared_ptr<WhittakerData> for_preset(const std::string& name, std::optional<int> n);

  const AlgebraSpec& algebra() const { return ctx_->algebra(); }
  const AlgebraPtr& algebra_ptr() const { return ctx_->algebra_ptr(); }
  const ContextPtr& context() const { return ctx_; }
  /// n for q(n), 0 otherwise.
  int n() const { return algebra().is_queer() ? algebra().n() : 0; }
  const std::vector<MGenerator>& m() const { return m_; }
  bool in_m(int generator) const;
  Rational chi(int generator) const;
  /// The odd generator θ of degree −1 with χ([θ,θ]) ≠ 0, if any.
  std::optional<int> residual_odd() const { return residual_; }
  Rational residual_chi() const { return residual_chi_; }
  bool chi_vanishes_on_brackets() const;

  Element generator(int index) const { return Element::generator(ctx_, index); }
  Element generator(const GeneratorId& id) const { return Element::generator(ctx_, id); }
  Element scalar(const Rational& c) const { return Element::scalar(ctx_, c); }
  Element zero() const { return Element(ctx_); }

  /// True if no monomial contains an m-generator.
  bool is_reduced(const Element& y) const;
  /// π(a) for a in any context of the same algebra.
  Element reduce(const Element& a);
  /// π(g·y) for a generator g and reduced y.
  Element act(int generator, const Element& y);
  /// π(ab) and π([a,b]) for reduced a, b.
  Element product(const Element& a, const Element& b);
  Element bracket(const Element& a, const Element& b);
  /// π([a, y]) for an m-generator a.
  Element m_action(int generator, const Element& y);

  bool is_whittaker(const Element& y);
  std::optional<WElement> certify(std::string name, const Element& y);

  int kazhdan_degree(const Element& y) const;
  int word_degree(const Word& w) const;
  int word_weight(const Word& w) const;
  Element top_symbol(const Element& y) const;

  /// Harish-Chandra projection to U(h); q(n) only.
  CartanElement theta(const Element& y) const;

  std::size_t cache_terms() const { return cache_terms_; }
  void clear_cache();

 private:
  std::shared_ptr<const TermList> act_word(int rank, const Word& w);
  void strip_into(Terms& acc, const Word& w, const Rational& c) const;
  void multiply_into(Terms& acc, int rank, const Terms& y, const Rational& c);

  ContextPtr ctx_;
  std::vector<MGenerator> m_;
  std::vector<Rational> chi_by_rank_;
  std::vector<bool> m_rank_;
  std::vector<int> kdeg_;
  std::vector<int> weight_;
  std::optional<int> residual_;
  Rational residual_chi_;
  std::unordered_map<std::string, std::shared_ptr<const TermList>> cache_;
  std::size_t cache_terms_ = 0;
  std::size_t budget_ = 6'000'000;
};

using WhittakerPtr = std::shared_ptr<WhittakerData>;

/// Casimir element Σ_i x^i x_i for the algebra's invariant form, (x^i|x_j) = δ_ij.
Element casimir(const ContextPtr& ctx);

}  // namespace superw
