#include "superw/sergeev.hpp"

#include <cstdlib>

namespace superw {

namespace {

SergeevKind other(SergeevKind k) { return k == SergeevKind::Even ? SergeevKind::Odd : SergeevKind::Even; }

Family family_of(SergeevKind k) { return k == SergeevKind::Even ? Family::E : Family::F; }

}  // namespace

GeneratorId signed_generator(int a, int b) {
  if (a == 0 || b == 0) throw Error("signed indices must be nonzero");
  int i = std::abs(a), j = std::abs(b);
  return (a > 0) == (b > 0) ? GeneratorId::E(i, j) : GeneratorId::F(i, j);
}

SergeevCache::SergeevCache(WhittakerPtr w) : w_(std::move(w)), n_(w_->n()) {
  if (!w_->algebra().is_queer()) throw Error("Sergeev elements are defined for q(n) only");
}

void SergeevCache::check_indices(int i, int j, int m) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw Error("Sergeev index out of range: (" + std::to_string(i) + "," + std::to_string(j) +
                ") with n = " + std::to_string(n_));
  }
  if (m < 1) throw Error("Sergeev level must be positive");
}

void SergeevCache::clear() {
  raw_.clear();
  reduced_.clear();
  signed_.clear();
}

const Element& SergeevCache::raw(SergeevKind kind, int i, int j, int m) {
  check_indices(i, j, m);
  Key key{static_cast<int>(kind), i, j, m};
  if (auto it = raw_.find(key); it != raw_.end()) return it->second;
  const ContextPtr& ctx = w_->context();
  Element out(ctx);
  if (m == 1) {
    out = Element::generator(ctx, GeneratorId{family_of(kind), i, j});
  } else {
    Rational sign = m % 2 == 0 ? -1 : 1;  // (−1)^{m+1}
    for (int k = 1; k <= n_; ++k) {
      out += Element::generator(ctx, GeneratorId::E(i, k)) * raw(kind, k, j, m - 1);
      out += Element::generator(ctx, GeneratorId::F(i, k)) * raw(other(kind), k, j, m - 1) * sign;
    }
  }
  return raw_.emplace(key, std::move(out)).first->second;
}

const Element& SergeevCache::reduced(SergeevKind kind, int i, int j, int m) {
  check_indices(i, j, m);
  Key key{static_cast<int>(kind), i, j, m};
  if (auto it = reduced_.find(key); it != reduced_.end()) return it->second;
  const AlgebraSpec& g = w_->algebra();
  Element out = w_->zero();
  if (m == 1) {
    out = w_->reduce(w_->generator(GeneratorId{family_of(kind), i, j}));
  } else {
    Rational sign = m % 2 == 0 ? -1 : 1;
    for (int k = 1; k <= n_; ++k) {
      out += w_->act(g.index_of(GeneratorId::E(i, k)), reduced(kind, k, j, m - 1));
      out += w_->act(g.index_of(GeneratorId::F(i, k)), reduced(other(kind), k, j, m - 1)) * sign;
    }
  }
  return reduced_.emplace(key, std::move(out)).first->second;
}

Element SergeevCache::signed_F(int i, int j, int m) {
  check_indices(std::abs(i), std::abs(j), m);
  if (i == 0 || j == 0) throw Error("signed indices must be nonzero");
  Key key{2, i, j, m};
  if (auto it = signed_.find(key); it != signed_.end()) return it->second;
  const ContextPtr& ctx = w_->context();
  Element out(ctx);
  if (m == 1) {
    out = Element::generator(ctx, signed_generator(i, j));
  } else {
    for (int k = -n_; k <= n_; ++k) {
      if (k == 0) continue;
      Element term = Element::generator(ctx, signed_generator(i, k)) * signed_F(k, j, m - 1);
      out += k < 0 ? -term : term;
    }
  }
  return signed_.emplace(key, out).first->second;
}

Element SergeevCache::central_element(int m) {
  if (m < 0) throw Error("central_element expects m >= 0");
  Element out(w_->context());
  for (int i = 1; i <= n_; ++i) out += raw(SergeevKind::Even, i, i, 2 * m + 1);
  return out;
}

Element SergeevCache::reduced_central(int m) {
  if (m < 0) throw Error("central_element expects m >= 0");
  Element out = w_->zero();
  for (int i = 1; i <= n_; ++i) out += reduced(SergeevKind::Even, i, i, 2 * m + 1);
  return out;
}

std::vector<Element> phi_generators(SergeevCache& s, int count) {
  int n = s.n();
  WhittakerData& w = s.whittaker();
  std::vector<Element> out;
  if (count <= 0) return out;
  out.push_back(s.reduced(SergeevKind::Odd, n, 1, n));
  const Element& e = s.reduced(SergeevKind::Even, n, 1, n + 1);
  for (int k = 1; k < count; ++k) out.push_back(w.bracket(e, out.back()) * Rational(1, 2));
  return out;
}

GeneratorFamilies w_generator_families(SergeevCache& s) {
  int n = s.n();
  WhittakerData& w = s.whittaker();
  GeneratorFamilies fam;
  auto add = [&](std::vector<WElement>& list, const std::string& name, const Element& y) {
    auto cert = w.certify(name, y);
    if (!cert) throw Error(name + " is not in the W-algebra");
    list.push_back(std::move(*cert));
  };
  std::string n1 = "(" + std::to_string(n) + ",1,";
  for (int m = n; m <= 2 * n - 1; ++m) {
    add(fam.family_a, "pi(sergeev_e" + n1 + std::to_string(m) + "))", s.reduced(SergeevKind::Even, n, 1, m));
    add(fam.family_a, "pi(sergeev_f" + n1 + std::to_string(m) + "))", s.reduced(SergeevKind::Odd, n, 1, m));
  }
  Element z = w.zero();
  for (int i = 1; i <= n; ++i) z += w.generator(GeneratorId::E(i, i));
  add(fam.family_b, "pi(central(0))", z);
  for (int i = 1; i <= n - 1; i += 2) {
    add(fam.family_b, "odd_z_" + std::to_string(i), s.reduced(SergeevKind::Even, n, 1, n + i));
  }
  auto phis = phi_generators(s, n);
  for (int k = 0; k < n; ++k) add(fam.family_b, "phi(" + std::to_string(k) + ")", phis[static_cast<std::size_t>(k)]);
  for (int i = 0; i <= n - 1; i += 2) {
    add(fam.central_z, "central_z_" + std::to_string(i), w.bracket(phis[0], phis[static_cast<std::size_t>(i)]));
  }
  return fam;
}

}  // namespace superw
