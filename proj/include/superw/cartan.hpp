#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "superw/error.hpp"
#include "superw/rational.hpp"

namespace superw {

/// Exponent vector packed 8 bits per variable (at most 8 variables).
using PackedExp = std::uint64_t;

constexpr int kMaxVariables = 8;

inline int exponent(PackedExp e, int var) { return static_cast<int>((e >> (8 * var)) & 0xff); }
inline PackedExp unit_exponent(int var) { return PackedExp{1} << (8 * var); }
int total_degree(PackedExp e, int nvars);

/// Degrevlex comparison: true when a precedes b in descending degrevlex order.
bool degrevlex_greater(PackedExp a, PackedExp b, int nvars);

/// Sparse commutative polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars);
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int var);
  static Polynomial monomial(int nvars, PackedExp e, const Rational& c);

  int nvars() const { return nvars_; }
  const std::unordered_map<PackedExp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(PackedExp e) const;
  /// Constant term.
  Rational constant_term() const { return coefficient(0); }
  bool is_constant() const;
  int degree() const;
  int degree_in(int var) const;

  void add_term(PackedExp e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(int k) const;
  /// Exact quotient a / b; throws if b does not divide a.
  Polynomial exact_divide(const Polynomial& b) const;
  /// Quotient and remainder of multivariate division by b (degrevlex).
  std::pair<Polynomial, Polynomial> divide(const Polynomial& b) const;

  Polynomial derivative(int var) const;
  /// Replaces variable var by the polynomial p.
  Polynomial substitute(int var, const Polynomial& p) const;
  /// Exchanges two variables.
  Polynomial swap_variables(int a, int b) const;
  /// Coefficient of var^k as a polynomial in the remaining variables.
  Polynomial coefficient_in(int var, int k) const;
  /// Same polynomial viewed in a ring with more variables.
  Polynomial extended(int nvars) const;
  /// Terms in descending degrevlex order.
  std::vector<std::pair<PackedExp, Rational>> sorted_terms() const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::unordered_map<PackedExp, Rational> terms_;
};

/// Default variable names x(1), ..., x(nvars).
std::vector<std::string> x_names(int nvars);
std::string render_monomial(PackedExp e, const std::vector<std::string>& names);

/// Element of U(h): polynomials in x_1..x_n on square-free ξ monomials,
/// with x_i central, ξ_iξ_j = −ξ_jξ_i and ξ_i² = x_i.
class CartanElement {
 public:
  using Mask = std::uint32_t;

  CartanElement() = default;
  explicit CartanElement(int n);
  static CartanElement scalar(int n, const Rational& c);
  static CartanElement x(int n, int i);
  static CartanElement xi(int n, int i);
  static CartanElement from_polynomial(const Polynomial& p, Mask m = 0);

  int n() const { return n_; }
  const std::map<Mask, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  /// Coefficient polynomial of ξ_mask.
  Polynomial coefficient(Mask m) const;
  /// The ξ-free part.
  Polynomial even_polynomial() const { return coefficient(0); }
  bool has_xi() const;
  /// Component of the given ξ-parity (0 even, 1 odd).
  CartanElement part(int parity) const;

  void add(Mask m, const Polynomial& p);

  CartanElement& operator+=(const CartanElement& o);
  CartanElement& operator-=(const CartanElement& o);
  CartanElement& operator*=(const Rational& c);
  CartanElement operator-() const;
  friend CartanElement operator+(CartanElement a, const CartanElement& b) { return a += b; }
  friend CartanElement operator-(CartanElement a, const CartanElement& b) { return a -= b; }
  friend CartanElement operator*(CartanElement a, const Rational& c) { return a *= c; }
  friend CartanElement operator*(const Rational& c, CartanElement a) { return a *= c; }
  friend CartanElement operator*(const CartanElement& a, const CartanElement& b);
  friend bool operator==(const CartanElement& a, const CartanElement& b);

  std::string str() const;

 private:
  int n_ = 0;
  std::map<Mask, Polynomial> parts_;
};

CartanElement h_multiply(const CartanElement& a, const CartanElement& b);
/// [a,b] = ab − (−1)^{p(a)p(b)} ba per ξ-parity component.
CartanElement cartan_supercommutator(const CartanElement& a, const CartanElement& b);

/// Sign ε with ξ_S ξ_T = ε · Π_{i∈S∩T} x_i · ξ_{S△T}.
int clifford_sign(CartanElement::Mask s, CartanElement::Mask t);

/// Square matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int size, int nvars);
  int size() const { return size_; }
  int nvars() const { return nvars_; }
  Polynomial& at(int i, int j) { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  const Polynomial& at(int i, int j) const { return entries_[static_cast<std::size_t>(i * size_ + j)]; }
  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int size_ = 0;
  int nvars_ = 0;
  std::vector<Polynomial> entries_;
};

/// t_ii = 0, t_ij = x_j (i < j), t_ij = −x_j (i > j); 0-based indices, n variables.
PolyMatrix t_matrix(int n);
/// Fraction-free (Bareiss) determinant.
Polynomial determinant(const PolyMatrix& m);
/// det(λ Id − M) as a polynomial in nvars+1 variables; λ is the last one.
Polynomial char_poly(const PolyMatrix& m);
Polynomial elementary_symmetric(int r, int n);
/// λ^n + σ_2 λ^{n−2} + σ_4 λ^{n−4} + ... in n+1 variables.
Polynomial expected_char_poly(int n);

/// Symmetric and (x_i + x_j) | ∂p/∂x_i − ∂p/∂x_j for all i < j.
bool supercent_check(const Polynomial& p);

/// Determinant of the coefficient matrix [φ^{(k)}_j]; nullopt if some image
/// is not of the form Σ_j φ_j ξ_j.
std::optional<Polynomial> independence_det(int n, const std::vector<CartanElement>& images);

/// Matrix of v ↦ [ω, v] on span(ξ_1..ξ_n): column j holds the coefficients of [ω, ξ_j].
/// Returns nullopt if the action leaves the span.
std::optional<PolyMatrix> ad_matrix(const CartanElement& omega);
/// ω = ½ (½Σx_i² + Σ_{i<j}ξ_iξ_j + ½z² − z).
CartanElement omega_formula(int n);
PolyMatrix ad_omega_matrix(int n);

enum class MatrixConvention { AsStated, Transpose, Negative, None };
MatrixConvention match_convention(const PolyMatrix& computed, const PolyMatrix& stated);
std::string convention_name(MatrixConvention c);

/// Applies a matrix to the ξ-linear part of v.
CartanElement apply_matrix(const PolyMatrix& m, const CartanElement& v);

}  // namespace superw
