#include "superw/cartan.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "superw/error.hpp"

namespace superw {

int total_degree(PackedExp e, int nvars) {
  int d = 0;
  for (int v = 0; v < nvars; ++v) d += exponent(e, v);
  return d;
}

bool degrevlex_greater(PackedExp a, PackedExp b, int nvars) {
  int da = total_degree(a, nvars), db = total_degree(b, nvars);
  if (da != db) return da > db;
  for (int v = nvars - 1; v >= 0; --v) {
    int ea = exponent(a, v), eb = exponent(b, v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

namespace {

bool divides(PackedExp small, PackedExp big, int nvars) {
  for (int v = 0; v < nvars; ++v) {
    if (exponent(small, v) > exponent(big, v)) return false;
  }
  return true;
}

void check_vars(int nvars) {
  if (nvars < 0 || nvars > kMaxVariables) throw Error("polynomials support at most 8 variables");
}

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomials live in different rings");
}

std::string coefficient_prefix(const Rational& mag, bool has_monomial) {
  if (!has_monomial) return mag.str();
  if (mag.is_one()) return "";
  return mag.str() + "*";
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial
// ---------------------------------------------------------------------------

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_vars(nvars); }

Polynomial Polynomial::constant(int nvars, const Rational& c) { return monomial(nvars, 0, c); }

Polynomial Polynomial::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw Error("variable index out of range");
  return monomial(nvars, unit_exponent(var), Rational(1));
}

Polynomial Polynomial::monomial(int nvars, PackedExp e, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

Rational Polynomial::coefficient(PackedExp e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational() : it->second;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e, nvars_));
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, exponent(e, var));
  return d;
}

void Polynomial::add_term(PackedExp e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [e, v] : p.terms_) v = -v;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  for (int v = 0; v < a.nvars_; ++v) {
    if (a.degree_in(v) + b.degree_in(v) > 255) throw Error("exponent overflow");
  }
  out.terms_.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& b) const {
  check_same_ring(*this, b);
  if (b.is_zero()) throw Error("division by the zero polynomial");
  auto leading = [&](const Polynomial& p) {
    auto best = p.terms_.begin();
    for (auto it = p.terms_.begin(); it != p.terms_.end(); ++it) {
      if (degrevlex_greater(it->first, best->first, nvars_)) best = it;
    }
    return *best;
  };
  auto [lb, cb] = leading(b);
  Polynomial q(nvars_), r(nvars_), p(*this);
  while (!p.is_zero()) {
    auto [lp, cp] = leading(p);
    if (divides(lb, lp, nvars_)) {
      Polynomial t = monomial(nvars_, lp - lb, cp / cb);
      q += t;
      p -= t * b;
    } else {
      r.add_term(lp, cp);
      p.add_term(lp, -cp);
    }
  }
  return {q, r};
}

Polynomial Polynomial::exact_divide(const Polynomial& b) const {
  auto [q, r] = divide(b);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = exponent(e, var);
    if (k > 0) out.add_term(e - unit_exponent(var), c * Rational(k));
  }
  return out;
}

Polynomial Polynomial::substitute(int var, const Polynomial& p) const {
  check_same_ring(*this, p);
  Polynomial out(nvars_);
  std::vector<Polynomial> powers{constant(nvars_, 1)};
  for (const auto& [e, c] : terms_) {
    int k = exponent(e, var);
    while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * p);
    PackedExp rest = e - static_cast<PackedExp>(k) * unit_exponent(var);
    out += monomial(nvars_, rest, c) * powers[static_cast<std::size_t>(k)];
  }
  return out;
}

Polynomial Polynomial::swap_variables(int a, int b) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    int ea = exponent(e, a), eb = exponent(e, b);
    PackedExp f = e - static_cast<PackedExp>(ea) * unit_exponent(a) -
                  static_cast<PackedExp>(eb) * unit_exponent(b) +
                  static_cast<PackedExp>(eb) * unit_exponent(a) +
                  static_cast<PackedExp>(ea) * unit_exponent(b);
    out.add_term(f, c);
  }
  return out;
}

Polynomial Polynomial::coefficient_in(int var, int k) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (exponent(e, var) == k) out.add_term(e - static_cast<PackedExp>(k) * unit_exponent(var), c);
  }
  return out;
}

Polynomial Polynomial::extended(int nvars) const {
  if (nvars < nvars_) throw Error("cannot drop variables");
  Polynomial out(nvars);
  out.terms_ = terms_;
  return out;
}

std::vector<std::pair<PackedExp, Rational>> Polynomial::sorted_terms() const {
  std::vector<std::pair<PackedExp, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return degrevlex_greater(a.first, b.first, nvars_); });
  return out;
}

std::vector<std::string> x_names(int nvars) {
  std::vector<std::string> names;
  for (int i = 1; i <= nvars; ++i) names.push_back("x(" + std::to_string(i) + ")");
  return names;
}

std::string render_monomial(PackedExp e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < names.size(); ++v) {
    int k = exponent(e, static_cast<int>(v));
    if (k == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> nm = names.empty() ? x_names(nvars_) : names;
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string mono = render_monomial(e, nm);
    out += coefficient_prefix(mag, !mono.empty()) + mono;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CartanElement
// ---------------------------------------------------------------------------

int clifford_sign(CartanElement::Mask s, CartanElement::Mask t) {
  int inversions = 0;
  for (CartanElement::Mask rest = t; rest != 0; rest &= rest - 1) {
    int idx = std::countr_zero(rest);
    CartanElement::Mask above = s & ~((CartanElement::Mask{2} << idx) - 1);
    inversions += std::popcount(above);
  }
  return (inversions & 1) ? -1 : 1;
}

CartanElement::CartanElement(int n) : n_(n) {
  if (n < 0 || n > kMaxVariables - 1) throw Error("U(h) supports n up to 7");
}

CartanElement CartanElement::scalar(int n, const Rational& c) {
  CartanElement e(n);
  e.add(0, Polynomial::constant(n, c));
  return e;
}

CartanElement CartanElement::x(int n, int i) {
  CartanElement e(n);
  e.add(0, Polynomial::variable(n, i - 1));
  return e;
}

CartanElement CartanElement::xi(int n, int i) {
  if (i < 1 || i > n) throw Error("xi index out of range");
  CartanElement e(n);
  e.add(Mask{1} << (i - 1), Polynomial::constant(n, 1));
  return e;
}

CartanElement CartanElement::from_polynomial(const Polynomial& p, Mask m) {
  CartanElement e(p.nvars());
  e.add(m, p);
  return e;
}

Polynomial CartanElement::coefficient(Mask m) const {
  auto it = parts_.find(m);
  return it == parts_.end() ? Polynomial(n_) : it->second;
}

bool CartanElement::has_xi() const {
  return std::any_of(parts_.begin(), parts_.end(), [](const auto& p) { return p.first != 0; });
}

CartanElement CartanElement::part(int parity) const {
  CartanElement out(n_);
  for (const auto& [m, p] : parts_) {
    if ((std::popcount(m) & 1) == parity) out.parts_.emplace(m, p);
  }
  return out;
}

void CartanElement::add(Mask m, const Polynomial& p) {
  if (p.is_zero()) return;
  if (p.nvars() != n_) throw Error("polynomial ring does not match U(h)");
  auto it = parts_.find(m);
  if (it == parts_.end()) {
    parts_.emplace(m, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) parts_.erase(it);
}

CartanElement& CartanElement::operator+=(const CartanElement& o) {
  if (o.n_ != n_) throw Error("U(h) elements for different n");
  for (const auto& [m, p] : o.parts_) add(m, p);
  return *this;
}

CartanElement& CartanElement::operator-=(const CartanElement& o) {
  if (o.n_ != n_) throw Error("U(h) elements for different n");
  for (const auto& [m, p] : o.parts_) add(m, -p);
  return *this;
}

CartanElement& CartanElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    parts_.clear();
    return *this;
  }
  for (auto& [m, p] : parts_) p *= c;
  return *this;
}

CartanElement CartanElement::operator-() const {
  CartanElement out(*this);
  for (auto& [m, p] : out.parts_) p = -p;
  return out;
}

CartanElement operator*(const CartanElement& a, const CartanElement& b) {
  if (a.n_ != b.n_) throw Error("U(h) elements for different n");
  CartanElement out(a.n_);
  for (const auto& [s, ps] : a.parts_) {
    for (const auto& [t, pt] : b.parts_) {
      CartanElement::Mask common = s & t;
      PackedExp shared = 0;
      for (CartanElement::Mask r = common; r != 0; r &= r - 1) shared += unit_exponent(std::countr_zero(r));
      Polynomial prod = ps * pt;
      Polynomial shifted(a.n_);
      Rational sign(clifford_sign(s, t));
      for (const auto& [e, c] : prod.terms()) shifted.add_term(e + shared, c * sign);
      out.add(s ^ t, shifted);
    }
  }
  return out;
}

bool operator==(const CartanElement& a, const CartanElement& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.n_ == b.n_ && a.parts_ == b.parts_;
}

std::string CartanElement::str() const {
  if (parts_.empty()) return "0";
  struct Item {
    Mask mask;
    PackedExp exp;
    Rational coef;
    int degree;
  };
  std::vector<Item> items;
  for (const auto& [m, p] : parts_) {
    for (const auto& [e, c] : p.terms()) {
      items.push_back({m, e, c, 2 * total_degree(e, n_) + 2 * std::popcount(m)});
    }
  }
  std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.exp != b.exp) return degrevlex_greater(a.exp, b.exp, n_);
    return a.mask < b.mask;
  });
  auto names = x_names(n_);
  std::string out;
  bool first = true;
  for (const Item& it : items) {
    std::string mono = render_monomial(it.exp, names);
    for (int i = 0; i < n_; ++i) {
      if (it.mask & (Mask{1} << i)) {
        if (!mono.empty()) mono += "*";
        mono += "xi(" + std::to_string(i + 1) + ")";
      }
    }
    Rational mag = it.coef.sign() < 0 ? -it.coef : it.coef;
    if (first) {
      if (it.coef.sign() < 0) out += "-";
    } else {
      out += it.coef.sign() < 0 ? " - " : " + ";
    }
    out += coefficient_prefix(mag, !mono.empty()) + mono;
    first = false;
  }
  return out;
}

CartanElement h_multiply(const CartanElement& a, const CartanElement& b) { return a * b; }

CartanElement cartan_supercommutator(const CartanElement& a, const CartanElement& b) {
  CartanElement out(a.n());
  for (int pa = 0; pa < 2; ++pa) {
    CartanElement ap = a.part(pa);
    if (ap.is_zero()) continue;
    for (int pb = 0; pb < 2; ++pb) {
      CartanElement bp = b.part(pb);
      if (bp.is_zero()) continue;
      if (pa == 1 && pb == 1) {
        out += ap * bp + bp * ap;
      } else {
        out += ap * bp - bp * ap;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

PolyMatrix::PolyMatrix(int size, int nvars)
    : size_(size), nvars_(nvars), entries_(static_cast<std::size_t>(size * size), Polynomial(nvars)) {}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(size_, nvars_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix t(size_, nvars_);
  for (int i = 0; i < size_; ++i)
    for (int j = 0; j < size_; ++j) t.at(i, j) = -at(i, j);
  return t;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (!(a.entries_[k] == b.entries_[k])) return false;
  }
  return true;
}

std::string PolyMatrix::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size_; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < size_; ++j) os << (j ? ", " : "") << at(i, j).str(names);
    os << "]";
  }
  os << "]";
  return os.str();
}

PolyMatrix t_matrix(int n) {
  if (n < 1) throw Error("n must be at least 1");
  PolyMatrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) t.at(i, j) = Polynomial::variable(n, j);
      if (i > j) t.at(i, j) = -Polynomial::variable(n, j);
    }
  return t;
}

Polynomial determinant(const PolyMatrix& input) {
  int n = input.size();
  if (n == 0) return Polynomial::constant(input.nvars(), 1);
  PolyMatrix m = input;
  Polynomial prev = Polynomial::constant(input.nvars(), 1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r) {
        if (!m.at(r, k).is_zero()) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return Polynomial(input.nvars());
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num.exact_divide(prev);
      }
      m.at(i, k) = Polynomial(input.nvars());
    }
    prev = m.at(k, k);
  }
  Polynomial det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

Polynomial char_poly(const PolyMatrix& m) {
  int n = m.size();
  int nv = m.nvars() + 1;
  if (nv > kMaxVariables) throw Error("too many variables for the characteristic polynomial");
  PolyMatrix a(n, nv);
  Polynomial lambda = Polynomial::variable(nv, nv - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = -m.at(i, j).extended(nv);
      if (i == j) a.at(i, j) += lambda;
    }
  return determinant(a);
}

Polynomial elementary_symmetric(int r, int n) {
  if (r < 0 || r > n) throw Error("elementary symmetric index out of range");
  Polynomial out(n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != r) continue;
    PackedExp e = 0;
    for (int v = 0; v < n; ++v)
      if (s & (1u << v)) e += unit_exponent(v);
    out.add_term(e, Rational(1));
  }
  return out;
}

Polynomial expected_char_poly(int n) {
  int nv = n + 1;
  Polynomial out(nv);
  Polynomial lambda = Polynomial::variable(nv, n);
  for (int k = 0; 2 * k <= n; ++k) {
    out += elementary_symmetric(2 * k, n).extended(nv) * lambda.pow(n - 2 * k);
  }
  return out;
}

bool supercent_check(const Polynomial& p) {
  int n = p.nvars();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(p.swap_variables(i, j) == p)) return false;
      Polynomial d = p.derivative(i) - p.derivative(j);
      // divisibility by x_i + x_j: vanishing at x_i = −x_j
      if (!d.substitute(i, -Polynomial::variable(n, j)).is_zero()) return false;
    }
  return true;
}

std::optional<Polynomial> independence_det(int n, const std::vector<CartanElement>& images) {
  if (static_cast<int>(images.size()) != n) throw Error("independence needs exactly n images");
  PolyMatrix m(n, n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [mask, p] : images[static_cast<std::size_t>(k)].parts()) {
      if (std::popcount(mask) != 1) return std::nullopt;
      m.at(k, std::countr_zero(mask)) = p;
    }
  }
  return determinant(m);
}

std::optional<PolyMatrix> ad_matrix(const CartanElement& omega) {
  int n = omega.n();
  PolyMatrix t(n, n);
  for (int j = 0; j < n; ++j) {
    CartanElement img = cartan_supercommutator(omega, CartanElement::xi(n, j + 1));
    for (const auto& [mask, p] : img.parts()) {
      if (std::popcount(mask) != 1) return std::nullopt;
      t.at(std::countr_zero(mask), j) = p;
    }
  }
  return t;
}

CartanElement omega_formula(int n) {
  CartanElement z(n), a(n);
  for (int i = 1; i <= n; ++i) {
    CartanElement xi = CartanElement::x(n, i);
    z += xi;
    a += xi * xi * Rational(1, 2);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) a += CartanElement::xi(n, i) * CartanElement::xi(n, j);
  a += z * z * Rational(1, 2);
  a -= z;
  return a * Rational(1, 2);
}

PolyMatrix ad_omega_matrix(int n) {
  auto m = ad_matrix(omega_formula(n));
  if (!m) throw Error("ad(omega) does not preserve the span of the xi");
  return *m;
}

MatrixConvention match_convention(const PolyMatrix& computed, const PolyMatrix& stated) {
  if (computed == stated) return MatrixConvention::AsStated;
  if (computed == stated.transpose()) return MatrixConvention::Transpose;
  if (computed == -stated) return MatrixConvention::Negative;
  return MatrixConvention::None;
}

std::string convention_name(MatrixConvention c) {
  switch (c) {
    case MatrixConvention::AsStated: return "T(xi_j) = sum_i t_ij xi_i";
    case MatrixConvention::Transpose: return "transpose";
    case MatrixConvention::Negative: return "negative";
    case MatrixConvention::None: return "no match";
  }
  return "no match";
}

CartanElement apply_matrix(const PolyMatrix& m, const CartanElement& v) {
  int n = m.size();
  CartanElement out(v.n());
  for (int j = 0; j < n; ++j) {
    Polynomial c = v.coefficient(CartanElement::Mask{1} << j);
    if (c.is_zero()) continue;
    for (int i = 0; i < n; ++i) {
      if (!m.at(i, j).is_zero()) out.add(CartanElement::Mask{1} << i, m.at(i, j) * c);
    }
  }
  return out;
}

}  // namespace superw
