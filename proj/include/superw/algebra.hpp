#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superw/error.hpp"
#include "superw/rational.hpp"

namespace superw {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }

enum class Family : std::uint8_t { E, F, Named };

/// Identifies a basis element. For q(n) the family selects e_{ij} or f_{ij};
/// for the named presets `row` is the position in the preset's basis list.
struct GeneratorId {
  Family family = Family::Named;
  int row = 0;
  int col = 0;

  static GeneratorId E(int i, int j) { return {Family::E, i, j}; }
  static GeneratorId F(int i, int j) { return {Family::F, i, j}; }
  static GeneratorId named(int index) { return {Family::Named, index, 0}; }

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

struct Generator {
  GeneratorId id;
  std::string name;
  Parity parity = Parity::Even;
  int dynkin = 0;
  int weight = 0;
};

struct Grading {
  int dynkin = 0;
  int weight = 0;
  int kazhdan = 0;
  Parity parity = Parity::Even;
};

/// Sparse linear combination of basis elements, sorted by basis index.
using Combination = std::vector<std::pair<int, Rational>>;

/// A finite-dimensional Lie superalgebra given by structure constants.
class AlgebraSpec {
 public:
  AlgebraSpec(std::string name, int n, std::vector<Generator> generators,
              std::vector<Combination> brackets);

  const std::string& name() const { return name_; }
  /// Rank parameter for q(n); 0 for the fixed presets.
  int n() const { return n_; }
  int size() const { return static_cast<int>(gens_.size()); }
  bool is_queer() const { return name_ == "q"; }

  const Generator& generator(int index) const { return gens_.at(static_cast<std::size_t>(index)); }
  const std::vector<Generator>& generators() const { return gens_; }
  Parity parity(int index) const { return gens_[static_cast<std::size_t>(index)].parity; }

  /// Index of `id`, or throws superw::Error when it does not belong here.
  int index_of(const GeneratorId& id) const;
  std::optional<int> find(std::string_view name) const;

  const Combination& bracket(int a, int b) const {
    return brackets_[static_cast<std::size_t>(a) * gens_.size() + static_cast<std::size_t>(b)];
  }

  /// Gram matrix of the invariant form in the generator basis, when present.
  const std::optional<std::vector<std::vector<Rational>>>& form() const { return form_; }
  void set_form(std::vector<std::vector<Rational>> gram) { form_ = std::move(gram); }

  /// Generator combination for `z` = sum of E(i,i) (q(n) only).
  Combination identity_element() const;

 private:
  std::string name_;
  int n_ = 0;
  std::vector<Generator> gens_;
  std::vector<Combination> brackets_;
  std::optional<std::vector<std::vector<Rational>>> form_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

/// Builds one of the presets "q" (requires n >= 1), "osp12" or "sl12".
AlgebraPtr build_preset(std::string_view name, std::optional<int> n = std::nullopt);

Combination bracket_gen(const AlgebraSpec& g, const GeneratorId& a, const GeneratorId& b);

Grading grading(const AlgebraSpec& g, const GeneratorId& id);

/// Super-Jacobi defect (-1)^{p(a)p(c)}[a,[b,c]] + cyclic, as a combination.
Combination jacobi_defect(const AlgebraSpec& g, int a, int b, int c);

std::string render_combination(const AlgebraSpec& g, const Combination& c);

/// Dense square supermatrix with a parity attached to every row/column index.
class SuperMatrix {
 public:
  SuperMatrix(std::vector<Parity> index_parity);
  static SuperMatrix unit(std::vector<Parity> index_parity, int i, int j);

  int dim() const { return static_cast<int>(parity_.size()); }
  const std::vector<Parity>& index_parity() const { return parity_; }
  Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i * dim() + j)]; }
  const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i * dim() + j)]; }

  /// Parity of a homogeneous matrix; throws if the matrix is inhomogeneous.
  Parity parity() const;
  bool is_zero() const;
  Rational supertrace() const;

  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix& operator+=(const SuperMatrix& o);
  SuperMatrix& operator-=(const SuperMatrix& o);
  SuperMatrix scaled(const Rational& c) const;
  friend bool operator==(const SuperMatrix&, const SuperMatrix&) = default;

 private:
  std::vector<Parity> parity_;
  std::vector<Rational> data_;
};

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b);

/// Builds structure constants from a matrix basis; brackets are decomposed
/// exactly and degrees are read off from ad(h).
AlgebraSpec algebra_from_matrices(std::string name, int n, std::vector<std::string> names,
                                  std::vector<GeneratorId> ids, std::vector<SuperMatrix> basis,
                                  const SuperMatrix& h);

/// Matrix realization used to build a preset (exposed for the oracle tests).
std::vector<SuperMatrix> preset_matrices(std::string_view name, std::optional<int> n = std::nullopt);

}  // namespace superw
