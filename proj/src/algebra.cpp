#include "superw/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace superw {

// ---------------------------------------------------------------------------
// SuperMatrix
// ---------------------------------------------------------------------------

SuperMatrix::SuperMatrix(std::vector<Parity> index_parity)
    : parity_(std::move(index_parity)), data_(parity_.size() * parity_.size()) {}

SuperMatrix SuperMatrix::unit(std::vector<Parity> index_parity, int i, int j) {
  SuperMatrix m(std::move(index_parity));
  m.at(i, j) = 1;
  return m;
}

Parity SuperMatrix::parity() const {
  std::optional<Parity> p;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) {
      if (at(i, j).is_zero()) continue;
      Parity q = parity_[static_cast<std::size_t>(i)] + parity_[static_cast<std::size_t>(j)];
      if (p && *p != q) throw Error("supermatrix is not parity-homogeneous");
      p = q;
    }
  }
  return p.value_or(Parity::Even);
}

bool SuperMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

Rational SuperMatrix::supertrace() const {
  Rational s;
  for (int i = 0; i < dim(); ++i) {
    if (parity_[static_cast<std::size_t>(i)] == Parity::Even) {
      s += at(i, i);
    } else {
      s -= at(i, i);
    }
  }
  return s;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  SuperMatrix r(parity_);
  for (int i = 0; i < dim(); ++i) {
    for (int k = 0; k < dim(); ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  }
  return r;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

SuperMatrix SuperMatrix::scaled(const Rational& c) const {
  SuperMatrix r(*this);
  for (auto& v : r.data_) v *= c;
  return r;
}

SuperMatrix supercommutator(const SuperMatrix& a, const SuperMatrix& b) {
  SuperMatrix ab = a * b;
  SuperMatrix ba = b * a;
  if (bit(a.parity()) * bit(b.parity()) == 1) {
    ab += ba;
  } else {
    ab -= ba;
  }
  return ab;
}

// ---------------------------------------------------------------------------
// Exact decomposition of a matrix in a fixed basis
// ---------------------------------------------------------------------------

namespace {

class Decomposer {
 public:
  explicit Decomposer(const std::vector<SuperMatrix>& basis) : size_(basis.size()) {
    for (std::size_t g = 0; g < basis.size(); ++g) {
      std::vector<Rational> v = flatten(basis[g]);
      std::vector<Rational> coords(size_);
      coords[g] = 1;
      reduce(v, coords);
      auto pivot = std::find_if(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); });
      if (pivot == v.end()) throw Error("matrix basis is linearly dependent");
      Rational inv = Rational(1) / *pivot;
      for (auto& x : v) x *= inv;
      for (auto& x : coords) x *= inv;
      rows_.push_back({static_cast<std::size_t>(pivot - v.begin()), std::move(v), std::move(coords)});
    }
  }

  /// Coordinates of `m`; throws when m lies outside the span.
  Combination operator()(const SuperMatrix& m) const {
    std::vector<Rational> v = flatten(m);
    std::vector<Rational> coords(size_);
    reduce(v, coords);
    if (std::any_of(v.begin(), v.end(), [](const Rational& r) { return !r.is_zero(); })) {
      throw Error("bracket leaves the span of the basis");
    }
    Combination out;
    for (std::size_t g = 0; g < size_; ++g) {
      if (!coords[g].is_zero()) out.emplace_back(static_cast<int>(g), -coords[g]);
    }
    return out;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Rational> vec;
    std::vector<Rational> coords;
  };

  static std::vector<Rational> flatten(const SuperMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.dim() * m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = 0; j < m.dim(); ++j) v.push_back(m.at(i, j));
    }
    return v;
  }

  // Subtracts echelon rows from v and mirrors every step on `coords`.
  void reduce(std::vector<Rational>& v, std::vector<Rational>& coords) const {
    for (const Row& r : rows_) {
      Rational c = v[r.pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (!r.vec[k].is_zero()) v[k] -= c * r.vec[k];
      }
      for (std::size_t k = 0; k < size_; ++k) {
        if (!r.coords[k].is_zero()) coords[k] -= c * r.coords[k];
      }
    }
  }

  std::size_t size_;
  std::vector<Row> rows_;
};

std::vector<Parity> queer_parities(int n) {
  std::vector<Parity> p(static_cast<std::size_t>(2 * n), Parity::Even);
  for (int i = n; i < 2 * n; ++i) p[static_cast<std::size_t>(i)] = Parity::Odd;
  return p;
}

const std::vector<Parity> kOneTwo = {Parity::Even, Parity::Odd, Parity::Odd};

SuperMatrix combo(std::initializer_list<std::tuple<int, int, int>> entries) {
  SuperMatrix m(kOneTwo);
  for (auto [i, j, c] : entries) m.at(i - 1, j - 1) += c;
  return m;
}

std::vector<std::vector<Rational>> gram(const std::vector<SuperMatrix>& basis, const Rational& scale) {
  std::vector<std::vector<Rational>> g(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      g[a][b] = scale * (basis[a] * basis[b]).supertrace();
    }
  }
  return g;
}

void check_n(std::string_view name, std::optional<int> n, bool needs_n) {
  if (needs_n) {
    if (!n) throw Error("preset '" + std::string(name) + "' requires n");
    if (*n < 1) throw Error("n must be at least 1, got " + std::to_string(*n));
  } else if (n) {
    throw Error("preset '" + std::string(name) + "' does not take n");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraSpec
// ---------------------------------------------------------------------------

AlgebraSpec::AlgebraSpec(std::string name, int n, std::vector<Generator> generators,
                         std::vector<Combination> brackets)
    : name_(std::move(name)), n_(n), gens_(std::move(generators)), brackets_(std::move(brackets)) {
  if (brackets_.size() != gens_.size() * gens_.size()) throw Error("bracket table has wrong size");
}

int AlgebraSpec::index_of(const GeneratorId& id) const {
  if (id.family == Family::Named) {
    if (is_queer() || id.row < 0 || id.row >= size()) {
      throw Error("generator does not belong to algebra " + name_);
    }
    return id.row;
  }
  if (!is_queer()) throw Error("e/f generators only exist in q(n)");
  if (id.row < 1 || id.row > n_ || id.col < 1 || id.col > n_) {
    throw Error("index (" + std::to_string(id.row) + "," + std::to_string(id.col) +
                ") out of range for q(" + std::to_string(n_) + ")");
  }
  int base = id.family == Family::E ? 0 : n_ * n_;
  return base + (id.row - 1) * n_ + (id.col - 1);
}

std::optional<int> AlgebraSpec::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (gens_[static_cast<std::size_t>(i)].name == name) return i;
  }
  return std::nullopt;
}

Combination AlgebraSpec::identity_element() const {
  if (!is_queer()) throw Error("z is only defined for q(n)");
  Combination c;
  for (int i = 1; i <= n_; ++i) c.emplace_back(index_of(GeneratorId::E(i, i)), 1);
  return c;
}

AlgebraSpec algebra_from_matrices(std::string name, int n, std::vector<std::string> names,
                                  std::vector<GeneratorId> ids, std::vector<SuperMatrix> basis,
                                  const SuperMatrix& h) {
  Decomposer decompose(basis);
  std::vector<Generator> gens;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    Combination c = decompose(supercommutator(h, basis[g]));
    int w = 0;
    if (c.size() > 1 || (c.size() == 1 && c[0].first != static_cast<int>(g))) {
      throw Error("basis element " + names[g] + " is not an ad(h) eigenvector");
    }
    if (c.size() == 1) {
      if (!c[0].second.is_integer()) throw Error("non-integral ad(h) eigenvalue");
      w = static_cast<int>(c[0].second.to_mpq().get_num().get_si());
    }
    gens.push_back({ids[g], names[g], basis[g].parity(), w, w});
  }
  std::vector<Combination> table;
  table.reserve(basis.size() * basis.size());
  for (const auto& a : basis) {
    for (const auto& b : basis) table.push_back(decompose(supercommutator(a, b)));
  }
  return AlgebraSpec(std::move(name), n, std::move(gens), std::move(table));
}

std::vector<SuperMatrix> preset_matrices(std::string_view name, std::optional<int> n) {
  std::vector<SuperMatrix> basis;
  if (name == "q") {
    check_n(name, n, true);
    int m = *n;
    auto par = queer_parities(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        SuperMatrix e(par);
        e.at(i, j) = 1;
        e.at(m + i, m + j) = 1;
        basis.push_back(std::move(e));
      }
    }
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        SuperMatrix f(par);
        f.at(i, m + j) = 1;
        f.at(m + i, j) = 1;
        basis.push_back(std::move(f));
      }
    }
  } else if (name == "osp12") {
    check_n(name, n, false);
    basis = {combo({{2, 3, 1}}),                // X
             combo({{3, 2, 1}}),                // Y
             combo({{2, 2, 1}, {3, 3, -1}}),    // H
             combo({{1, 2, 1}, {3, 1, -1}}),    // theta
             combo({{1, 3, 1}, {2, 1, 1}})};    // r
  } else if (name == "sl12") {
    check_n(name, n, false);
    basis = {combo({{1, 1, 1}, {3, 3, 1}}),  // h1
             combo({{1, 1, 1}, {2, 2, 1}}),  // h2
             combo({{2, 3, 1}}),             // e
             combo({{3, 2, 1}}),             // f
             combo({{1, 3, 1}}),             // e+
             combo({{1, 2, 1}}),             // e-
             combo({{2, 1, 1}}),             // f+
             combo({{3, 1, 1}})};            // f-
  } else {
    throw Error("unknown preset '" + std::string(name) + "' (valid: q, osp12, sl12)");
  }
  return basis;
}

AlgebraPtr build_preset(std::string_view name, std::optional<int> n) {
  std::vector<SuperMatrix> basis = preset_matrices(name, n);
  if (name == "q") {
    int m = *n;
    std::vector<std::string> names;
    std::vector<GeneratorId> ids;
    for (Family fam : {Family::E, Family::F}) {
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          ids.push_back({fam, i, j});
          names.push_back(std::string(fam == Family::E ? "e(" : "f(") + std::to_string(i) + "," +
                          std::to_string(j) + ")");
        }
      }
    }
    SuperMatrix h(queer_parities(m));
    for (int i = 0; i < m; ++i) {
      h.at(i, i) = m - 1 - 2 * i;
      h.at(m + i, m + i) = m - 1 - 2 * i;
    }
    return std::make_shared<const AlgebraSpec>(
        algebra_from_matrices("q", m, std::move(names), std::move(ids), std::move(basis), h));
  }
  std::vector<std::string> names;
  if (name == "osp12") {
    names = {"X", "Y", "H", "theta", "r"};
  } else {
    names = {"h1", "h2", "e", "f", "ep", "em", "fp", "fm"};
  }
  std::vector<GeneratorId> ids;
  for (std::size_t i = 0; i < names.size(); ++i) ids.push_back(GeneratorId::named(static_cast<int>(i)));
  SuperMatrix h = combo({{2, 2, 1}, {3, 3, -1}});
  AlgebraSpec spec = algebra_from_matrices(std::string(name), 0, std::move(names), std::move(ids),
                                           basis, h);
  // osp12: (a|b) = ½ str(ab); sl12: −2 str(ab), the scale at which [a,b] = π(Ω)
  spec.set_form(gram(basis, name == "osp12" ? Rational(1, 2) : Rational(-2)));
  return std::make_shared<const AlgebraSpec>(std::move(spec));
}

Combination bracket_gen(const AlgebraSpec& g, const GeneratorId& a, const GeneratorId& b) {
  return g.bracket(g.index_of(a), g.index_of(b));
}

Grading grading(const AlgebraSpec& g, const GeneratorId& id) {
  const Generator& gen = g.generator(g.index_of(id));
  return {gen.dynkin, gen.weight, gen.dynkin + 2, gen.parity};
}

Combination jacobi_defect(const AlgebraSpec& g, int a, int b, int c) {
  std::map<int, Rational> acc;
  auto term = [&](int x, int y, int w) {
    int sign = (bit(g.parity(x)) && bit(g.parity(w))) ? -1 : 1;
    for (const auto& [k, ck] : g.bracket(y, w)) {
      for (const auto& [l, cl] : g.bracket(x, k)) acc[l] += Rational(sign) * ck * cl;
    }
  };
  term(a, b, c);
  term(b, c, a);
  term(c, a, b);
  Combination out;
  for (auto& [k, v] : acc) {
    if (!v.is_zero()) out.emplace_back(k, v);
  }
  return out;
}

std::string render_combination(const AlgebraSpec& g, const Combination& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c) {
    Rational mag = v.sign() < 0 ? -v : v;
    if (first) {
      if (v.sign() < 0) os << "-";
    } else {
      os << (v.sign() < 0 ? " - " : " + ");
    }
    if (!mag.is_one()) os << mag << "*";
    os << g.generator(k).name;
    first = false;
  }
  return os.str();
}

}  // namespace superw
