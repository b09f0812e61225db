#include "superw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "superw/cartan.hpp"
#include "superw/linalg.hpp"
#include "superw/sergeev.hpp"
#include "superw/yangian.hpp"

namespace superw {

namespace {

std::string brief(std::string s) {
  constexpr std::size_t kMax = 400;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

std::string num(long long v) { return std::to_string(v); }

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  void expect(std::string name, bool ok, const std::function<std::string()>& fail, std::string note = "") {
    out_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, ok ? std::move(note) : brief(fail())});
  }

  template <class T>
  void equal(std::string name, const T& got, const T& want, std::string note = "") {
    expect(std::move(name), got == want, [&] { return "got " + got.str() + "; expected " + want.str(); },
           std::move(note));
  }

  void zero(std::string name, const Element& got, std::string note = "") {
    expect(std::move(name), got.is_zero(), [&] { return "got " + got.str() + "; expected 0"; }, std::move(note));
  }

  void skip(std::string name, std::string reason) { out_.push_back({std::move(name), Status::Skipped, std::move(reason)}); }

 private:
  std::vector<CheckResult>& out_;
};

struct Named {
  std::string name;
  Element value;
};

/// Shared q(n) state for the suites.
struct QEnv {
  explicit QEnv(int n_) : w(WhittakerData::queer(n_)), s(w), n(n_) {}

  const Element& e(int i, int j, int m) { return s.reduced(SergeevKind::Even, i, j, m); }
  const Element& f(int i, int j, int m) { return s.reduced(SergeevKind::Odd, i, j, m); }
  Element gen(const GeneratorId& id) const { return w->generator(id); }

  Element z() const {
    Element out = w->zero();
    for (int i = 1; i <= n; ++i) out += gen(GeneratorId::E(i, i));
    return out;
  }

  /// H_k = (½ ad e)^k H_0 in g, e = Σ e_{i,i+1}, H_0 = Σ (−1)^{i−1} f_ii.
  std::vector<Element> h_family(int count) const {
    Element e = w->zero(), h = w->zero();
    for (int i = 1; i < n; ++i) e += gen(GeneratorId::E(i, i + 1));
    for (int i = 1; i <= n; ++i) h += gen(GeneratorId::F(i, i)) * Rational(i % 2 == 1 ? 1 : -1);
    std::vector<Element> out{h};
    for (int k = 1; k < count; ++k) out.push_back(supercommutator(e, out.back()) * Rational(1, 2));
    return out;
  }

  const std::vector<Element>& phis(int count) {
    if (static_cast<int>(phis_.size()) < count) phis_ = phi_generators(s, count);
    return phis_;
  }

  /// z_0..z_{n−1} (central_z for even index, odd_z for odd) followed by Φ_0..Φ_{n−1}.
  std::vector<Named> gen_generators() {
    const auto& ph = phis(n);
    std::vector<Named> out;
    for (int i = 0; i < n; ++i) {
      if (i % 2 == 0) {
        out.push_back({"central_z_" + num(i), w->bracket(ph[0], ph[static_cast<std::size_t>(i)])});
      } else {
        out.push_back({"odd_z_" + num(i), e(n, 1, n + i)});
      }
    }
    for (int k = 0; k < n; ++k) out.push_back({"phi(" + num(k) + ")", ph[static_cast<std::size_t>(k)]});
    return out;
  }

  CartanElement x(int i) const { return CartanElement::x(n, i); }
  CartanElement xi(int i) const { return CartanElement::xi(n, i); }

  WhittakerPtr w;
  SergeevCache s;
  int n;

 private:
  std::vector<Element> phis_;
};

std::string e_name(int i, int j, int m) { return "pi(sergeev_e(" + num(i) + "," + num(j) + "," + num(m) + "))"; }
std::string f_name(int i, int j, int m) { return "pi(sergeev_f(" + num(i) + "," + num(j) + "," + num(m) + "))"; }

// Σ over top ≥ i_1 ≥ … ≥ i_len ≥ 1 of Π_t (x_{i_t} + (−1)^{len−t} ξ_{i_t}).
CartanElement chain_sum(int n, int top, int len) {
  CartanElement total(n);
  std::function<void(int, int, const CartanElement&)> rec = [&](int t, int bound, const CartanElement& acc) {
    if (t > len) {
      total += acc;
      return;
    }
    Rational s = (len - t) % 2 == 0 ? 1 : -1;
    for (int i = bound; i >= 1; --i) rec(t + 1, i, acc * (CartanElement::x(n, i) + CartanElement::xi(n, i) * s));
  };
  rec(1, top, CartanElement::scalar(n, 1));
  return total;
}

// ---------------------------------------------------------------------------

void claim1(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  if (n == 1) rec.expect("levels below n", true, [] { return ""; }, "no levels below n = 1");
  for (int l = 1; l <= n - 1; ++l)
    for (int m = l + 1; m <= n; ++m) {
      rec.equal(e_name(m, 1, l), q.e(m, 1, l), q.w->scalar(m == l + 1 ? 1 : 0));
      rec.equal(f_name(m, 1, l), q.f(m, 1, l), q.w->zero());
    }
}

void claim11(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  std::string bad;
  for (int m = 1; m <= n && bad.empty(); ++m) {
    Element e = q.w->zero(), f = q.w->zero();
    for (int k = 1; k <= m; ++k) {
      e += q.gen(GeneratorId::E(k, k));
      f += q.gen(GeneratorId::F(k, k)) * Rational(k % 2 == 1 ? 1 : -1);
    }
    if (!(q.e(m, 1, m) == e)) bad = e_name(m, 1, m) + " = " + q.e(m, 1, m).str() + "; expected " + e.str();
    else if (!(q.f(m, 1, m) == f)) bad = f_name(m, 1, m) + " = " + q.f(m, 1, m).str() + "; expected " + f.str();
  }
  rec.expect("pi(sergeev_e(m,1,m)) = pi(e(1,1) + ... + e(m,m)), pi(sergeev_f(m,1,m)) = pi(H_0 truncated), m <= n",
             bad.empty(), [&] { return bad; }, "row n gives pi(z) and pi(H_0)");
}

void claim2(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  for (int l = 0; l <= n - 1; ++l)
    for (int pp = 1; pp <= n; ++pp) {
      int r = std::min(pp, n - l);
      Element want_e = w.zero(), want_f = w.zero();
      for (int i = 1; i <= r; ++i) {
        want_e += q.gen(GeneratorId::E(i, i + l));
        want_f += q.gen(GeneratorId::F(i, i + l)) * Rational((l + 1 - i) % 2 == 0 ? 1 : -1);
      }
      for (bool even : {true, false}) {
        const Element& y = even ? q.e(pp, 1, pp + l) : q.f(pp, 1, pp + l);
        const Element& want = even ? want_e : want_f;
        std::string name = "P(" + (even ? e_name(pp, 1, pp + l) : f_name(pp, 1, pp + l)) + ")";
        if (y.is_zero()) {
          rec.expect(name, false, [] { return "element is zero"; });
          continue;
        }
        Element top = w.top_symbol(y);
        int deg = w.kazhdan_degree(y);
        int wt = w.word_weight(top.sorted_terms().front().first);
        bool ok = top == want && deg == 2 * l + 2 && wt == 2 * l;
        rec.expect(name, ok, [&] {
          return "top " + top.str() + " (degree " + num(deg) + ", weight " + num(wt) + "); expected " + want.str() +
                 " (degree " + num(2 * l + 2) + ", weight " + num(2 * l) + ")";
        });
      }
    }
  // top symbols of the f-row against H_k computed by brackets in g
  auto h = q.h_family(n);
  for (int k = 1; k <= n; ++k) {
    const Element& y = q.f(n, 1, n - 1 + k);
    rec.equal("P(" + f_name(n, 1, n - 1 + k) + ") = H_" + num(k - 1), w.top_symbol(y), h[static_cast<std::size_t>(k - 1)]);
  }
}

void in_w(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  int top = p.max_level.value_or(2 * n - 1);
  for (int m = 1; m <= top; ++m) {
    rec.expect(e_name(n, 1, m) + " in W", w.is_whittaker(q.e(n, 1, m)), [] { return "ad(m) does not annihilate it"; });
    rec.expect(f_name(n, 1, m) + " in W", w.is_whittaker(q.f(n, 1, m)), [] { return "ad(m) does not annihilate it"; });
  }
  auto gens = q.gen_generators();
  for (const auto& g : gens) {
    rec.expect(g.name + " in W", w.is_whittaker(g.value), [] { return "ad(m) does not annihilate it"; });
  }
  // closure under products and brackets
  std::vector<Named> fam;
  for (int m = n; m <= 2 * n - 1; ++m) {
    fam.push_back({e_name(n, 1, m), q.e(n, 1, m)});
    fam.push_back({f_name(n, 1, m), q.f(n, 1, m)});
  }
  std::string bad;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < fam.size() && bad.empty(); ++a)
    for (std::size_t b = a; b < fam.size() && bad.empty(); ++b) {
      if (fam[a].value.terms().size() * fam[b].value.terms().size() > 20000) continue;
      ++pairs;
      if (!w.is_whittaker(w.product(fam[a].value, fam[b].value))) bad = fam[a].name + "*" + fam[b].name;
      else if (!w.is_whittaker(w.bracket(fam[a].value, fam[b].value))) bad = "bracket(" + fam[a].name + "," + fam[b].name + ")";
    }
  rec.expect("products and brackets of generators stay in W", bad.empty(), [&] { return bad + " is not in W"; },
             num(static_cast<long long>(pairs)) + " pairs");
}

void corhc(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  for (int m = 1; m <= n; ++m) {
    Element sum = w.zero(), formula = w.zero();
    for (int i = 1; i <= m; ++i) {
      Element eii = q.gen(GeneratorId::E(i, i));
      sum += eii;
      formula += eii * eii * Rational(1, 2);
    }
    for (int i = 1; i <= std::min(m, n - 1); ++i) formula += q.gen(GeneratorId::E(i, i + 1));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        formula += q.gen(GeneratorId::F(i, i)) * q.gen(GeneratorId::F(j, j)) * Rational((j - i) % 2 == 0 ? 1 : -1);
      }
    formula += sum * sum * Rational(1, 2) - sum;
    rec.equal(e_name(m, 1, m + 1), q.e(m, 1, m + 1), w.reduce(formula));
  }
  CartanElement z(n), want(n);
  for (int i = 1; i <= n; ++i) {
    z += q.x(i);
    want += q.x(i) * q.x(i) * Rational(1, 2);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) want += q.xi(i) * q.xi(j);
  want += z * z * Rational(1, 2) - z;
  rec.equal("theta(" + e_name(n, 1, n + 1) + ")", w.theta(q.e(n, 1, n + 1)), want);
}

void hcgenerators(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  for (int k = 1; k <= n; ++k) {
    CartanElement s = chain_sum(n, n, k);
    rec.equal("theta(" + e_name(n, 1, n + k - 1) + ") = even part", w.theta(q.e(n, 1, n + k - 1)), s.part(0));
    rec.equal("theta(" + f_name(n, 1, n + k - 1) + ") = odd part", w.theta(q.f(n, 1, n + k - 1)), s.part(1));
  }
  for (int l = 0; l <= n - 1; ++l)
    for (int pp = 1; pp <= n; ++pp) {
      rec.equal("theta(" + e_name(pp, 1, pp + l) + " + " + f_name(pp, 1, pp + l) + ")",
                w.theta(q.e(pp, 1, pp + l) + q.f(pp, 1, pp + l)), chain_sum(n, pp, l + 1));
    }
}

void phi_brackets(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  const auto& ph = q.phis(2 * n - 1);
  auto h = q.h_family(n);
  for (int k = 0; k < n; ++k) {
    rec.equal("P(phi(" + num(k) + ")) = H_" + num(k), w.top_symbol(ph[static_cast<std::size_t>(k)]),
              h[static_cast<std::size_t>(k)]);
  }
  for (int m = 0; m < n; ++m)
    for (int pp = 0; pp < n; ++pp) {
      Element b = w.bracket(ph[static_cast<std::size_t>(m)], ph[static_cast<std::size_t>(pp)]);
      std::string name = "bracket(phi(" + num(m) + "),phi(" + num(pp) + "))";
      if ((m + pp) % 2 == 1) {
        rec.zero(name, b);
      } else {
        Element want = w.bracket(ph[0], ph[static_cast<std::size_t>(m + pp)]) * Rational(m % 2 == 0 ? 1 : -1);
        rec.equal(name + " = (-1)^" + num(m) + " bracket(phi(0),phi(" + num(m + pp) + "))", b, want);
      }
    }
  auto gens = q.gen_generators();
  for (int i = 0; i < n; i += 2) {
    Element zi = w.bracket(ph[0], ph[static_cast<std::size_t>(i)]);
    std::string bad;
    for (const auto& g : gens) {
      if (!w.bracket(zi, g.value).is_zero()) {
        bad = g.name;
        break;
      }
    }
    rec.expect("central_z_" + num(i) + " commutes with the generators", bad.empty(),
               [&] { return "bracket with " + bad + " is nonzero"; });
  }
}

void evencommute(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  constexpr std::size_t kDirectLimit = 3'000'000;
  auto check_pair = [&](const std::string& name, const Element& a, const Element& b) {
    if (p.exhaustive || a.terms().size() * b.terms().size() <= kDirectLimit) {
      rec.zero(name, w.bracket(a, b), "direct");
      return;
    }
    // ϑ is an injective homomorphism on W, so the bracket vanishes iff its image does
    CartanElement ta = w.theta(a), tb = w.theta(b);
    CartanElement c = cartan_supercommutator(ta, tb);
    rec.expect(name, c.is_zero(), [&] { return "theta image of the bracket is " + c.str(); }, "via theta");
  };
  for (int i = 1; i <= 2 * n - 1; i += 2)
    for (int j = i + 2; j <= 2 * n - 1; j += 2) {
      check_pair("bracket(" + e_name(n, 1, n + i) + "," + e_name(n, 1, n + j) + ")", q.e(n, 1, n + i), q.e(n, 1, n + j));
    }
  for (int m = 1; m <= 2 * n - 1; m += 2) {
    check_pair("bracket(" + f_name(n, 1, n) + "," + f_name(n, 1, n + m) + ")", q.f(n, 1, n), q.f(n, 1, n + m));
  }
}

void q2_table(const SuiteParams&, Recorder& rec) {
  QEnv q(2);
  WhittakerData& w = *q.w;
  const auto& ph = q.phis(2);
  CartanElement x1 = q.x(1), x2 = q.x(2), xi1 = q.xi(1), xi2 = q.xi(2);
  CartanElement z0 = w.theta(w.bracket(ph[0], ph[0]));
  CartanElement phi0 = w.theta(ph[0]), phi1 = w.theta(ph[1]);
  CartanElement z1 = -w.theta(q.e(2, 1, 3)) + z0 * z0 * Rational(1, 4) - z0 * Rational(1, 2);
  rec.equal("z_0 = 2x(1) + 2x(2)", z0, x1 * Rational(2) + x2 * Rational(2));
  rec.equal("phi_0 = xi(1) + xi(2)", phi0, xi1 + xi2);
  rec.equal("phi_1 = x(2)*xi(1) - x(1)*xi(2)", phi1, x2 * xi1 - x1 * xi2);
  rec.equal("z_1 = x(1)*x(2) - xi(1)*xi(2)", z1, x1 * x2 - xi1 * xi2);
  rec.equal("phi_0^2 = z_0/2", phi0 * phi0, z0 * Rational(1, 2));
  rec.equal("phi_0*phi_1 = -z_0*xi(1)*xi(2)/2", phi0 * phi1, z0 * xi1 * xi2 * Rational(-1, 2));
  rec.equal("phi_1^2 = z_0*x(1)*x(2)/2", phi1 * phi1, z0 * x1 * x2 * Rational(1, 2));
  rec.equal("[z_1, phi_0] = -2 phi_1", cartan_supercommutator(z1, phi0), phi1 * Rational(-2));
  rec.equal("[z_1, phi_1] = 2 x(1)*x(2)*phi_0", cartan_supercommutator(z1, phi1), x1 * x2 * phi0 * Rational(2));
}

void supercent_central(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  WhittakerData& w = *q.w;
  for (int m = 0; m <= 2; ++m) {
    Element c = q.s.central_element(m);
    int bad = -1;
    for (int g = 0; g < w.algebra().size() && bad < 0; ++g) {
      if (!supercommutator(c, w.generator(g)).is_zero()) bad = g;
    }
    rec.expect("central(" + num(m) + ") is central in U(g)", bad < 0,
               [&] { return "bracket with " + w.algebra().generator(bad).name + " is nonzero"; });
    CartanElement img = w.theta(q.s.reduced_central(m));
    bool ok = !img.has_xi() && supercent_check(img.even_polynomial());
    rec.expect("theta(pi(central(" + num(m) + "))) satisfies the supercentre condition", ok,
               [&] { return "image " + img.str(); });
  }
}

void charpol(const SuiteParams& p, Recorder& rec) {
  Polynomial got = char_poly(t_matrix(p.n));
  Polynomial want = expected_char_poly(p.n);
  std::vector<std::string> names = x_names(p.n);
  names.push_back("lambda");
  rec.expect("char_poly(T), n = " + num(p.n), got == want,
             [&] { return "got " + got.str(names) + "; expected " + want.str(names); }, got.str(names));
}

void independence(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  std::vector<CartanElement> images;
  for (const auto& ph : q.phis(q.n)) images.push_back(q.w->theta(ph));
  auto det = independence_det(q.n, images);
  rec.expect("theta(phi(k)) are xi-linear", det.has_value(), [] { return "an image leaves span(xi)"; });
  if (det) {
    auto names = x_names(q.n);
    rec.expect("det[phi_j^(k)] != 0", !det->is_zero(), [] { return "determinant vanishes"; }, brief(det->str(names)));
  }
}

void ad_omega(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  WhittakerData& w = *q.w;
  CartanElement omega = w.theta(q.e(n, 1, n + 1)) * Rational(1, 2);
  auto t = ad_matrix(omega);
  rec.expect("ad(omega) preserves span(xi)", t.has_value(), [] { return "ad(omega) leaves span(xi)"; });
  if (!t) return;
  PolyMatrix stated = t_matrix(n);
  MatrixConvention c = match_convention(*t, stated);
  rec.expect("ad(omega) matrix = T", c == MatrixConvention::AsStated,
             [&] { return "computed " + t->str() + " matches " + convention_name(c); }, "column convention");
  const auto& ph = q.phis(n);
  for (int k = 1; k < n; ++k) {
    rec.equal("T(phi_" + num(k - 1) + ") = phi_" + num(k), apply_matrix(*t, w.theta(ph[static_cast<std::size_t>(k - 1)])),
              w.theta(ph[static_cast<std::size_t>(k)]));
  }
}

void center_onedir(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  WhittakerData& w = *q.w;
  auto gens = q.gen_generators();
  for (int m = 0; m <= 2; ++m) {
    Element c = q.s.reduced_central(m);
    std::string bad;
    for (const auto& g : gens) {
      if (!w.bracket(c, g.value).is_zero()) {
        bad = g.name;
        break;
      }
    }
    rec.expect("pi(central(" + num(m) + ")) commutes with the generators", bad.empty(),
               [&] { return "bracket with " + bad + " is nonzero"; });
  }
}

void al_identity(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  int k = n % 2 == 0 ? n / 2 : (n - 1) / 2;
  int big_n = 1 << (k + 1);
  auto pool = q.gen_generators();
  std::mt19937_64 rng(p.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> len(1, 2);
  std::string bad;
  int done = 0;
  for (int s = 0; s < p.samples && bad.empty(); ++s) {
    std::vector<Element> u;
    std::string label;
    for (int t = 0; t < big_n; ++t) {
      int l = len(rng);
      const Named& a = pool[pick(rng)];
      Element v = a.value;
      std::string name = a.name;
      if (l == 2) {
        const Named& b = pool[pick(rng)];
        v = q.w->product(v, b.value);
        name += "*" + b.name;
      }
      u.push_back(std::move(v));
      label += (label.empty() ? "" : ", ") + name;
    }
    auto wmul = [&](const Element& a, const Element& b) { return q.w->product(a, b); };
    if (!standard_polynomial(u, wmul).is_zero()) bad = "sample " + num(s) + ": (" + label + ")";
    ++done;
  }
  rec.expect("s_" + num(big_n) + " vanishes on sampled tuples", bad.empty(), [&] { return bad; },
             num(done) + " samples, seed " + std::to_string(p.seed));
}

void yangian(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int n = q.n;
  int level = p.max_level.value_or(n == 2 ? 4 : 3);
  YangianMap ym(q.s);
  auto list = enumerate_relations(level);
  for (const auto& inst : list.instances) {
    auto r = ym.check(inst);
    rec.expect("relation " + inst.label(), r.pass,
               [&] { return render(inst.lhs) + " = " + render(inst.rhs) + " maps to " + r.lhs.str() + " vs " + r.rhs.str(); });
  }
  rec.expect("instance count", true, [] { return ""; },
             num(static_cast<long long>(list.raw_count)) + " raw, " + num(static_cast<long long>(list.instances.size())) +
                 " after canonicalization");
  std::string missing;
  for (int m = n; m <= 2 * n - 1; ++m) {
    for (bool even : {true, false}) {
      const Element& target = even ? q.e(n, 1, m) : q.f(n, 1, m);
      Element img = ym.image({even ? 1 : -1, 1, m - n + 1});
      if (!(img == target) && !(img == -target)) missing = even ? e_name(n, 1, m) : f_name(n, 1, m);
    }
  }
  rec.expect("generators of W are images", missing.empty(), [&] { return missing + " is not an image"; });
  if (n != 2) {
    rec.skip("sign mutations", "mutation test runs at n = 2");
    return;
  }
  std::string survivors;
  for (int flip = 0; flip < kSignSlots; ++flip) {
    bool broken = false;
    auto mutated = enumerate_relations(level, flip);
    for (const auto& inst : mutated.instances) {
      if (!ym.check(inst).pass) {
        broken = true;
        break;
      }
    }
    if (!broken) survivors += (survivors.empty() ? "" : ", ") + num(flip);
  }
  rec.expect("each single sign flip breaks a relation", survivors.empty(),
             [&] { return "sign slots " + survivors + " survive"; }, num(kSignSlots) + " slots");
}

// ---------------------------------------------------------------------------
// Monomials in W generators and dimension counts

struct Monomial {
  std::string name;
  int degree;
  Element value;
};

struct GenSpec {
  std::string name;
  int degree;
  bool odd;
  Element value;
};

std::vector<GenSpec> hilbert_generators(QEnv& q) {
  int n = q.n;
  std::vector<GenSpec> out;
  out.push_back({"pi(central(0))", 2, false, q.z()});
  for (int k = 1; k <= n - 1; ++k) out.push_back({e_name(n, 1, n + k), 2 * k + 2, false, q.e(n, 1, n + k)});
  const auto& ph = q.phis(n);
  for (int k = 0; k < n; ++k) out.push_back({"phi(" + num(k) + ")", 2 * k + 2, true, ph[static_cast<std::size_t>(k)]});
  return out;
}

std::vector<Monomial> generator_monomials(QEnv& q, int max_degree) {
  auto gens = hilbert_generators(q);
  std::vector<Monomial> out;
  std::function<void(std::size_t, const Monomial&)> rec = [&](std::size_t idx, const Monomial& acc) {
    if (idx == gens.size()) {
      out.push_back(acc);
      return;
    }
    const GenSpec& g = gens[idx];
    Monomial cur = acc;
    for (int e = 0;; ++e) {
      rec(idx + 1, cur);
      if (g.odd && e >= 1) break;
      if (cur.degree + g.degree > max_degree) break;
      cur.value = q.w->product(cur.value, g.value);
      cur.degree += g.degree;
      cur.name += (cur.name.empty() ? "" : "*") + g.name;
    }
  };
  rec(0, Monomial{"", 0, q.w->scalar(1)});
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.degree < b.degree; });
  return out;
}

SparseRow row_of(const Element& y, ColumnIndex<Word>& cols) {
  SparseRow r;
  for (const auto& [w, c] : y.terms()) r.emplace(cols(w), c);
  return r;
}

SparseRow row_of(const CartanElement& y, ColumnIndex<std::pair<CartanElement::Mask, PackedExp>>& cols) {
  SparseRow r;
  for (const auto& [mask, poly] : y.parts())
    for (const auto& [e, c] : poly.terms()) r.emplace(cols({mask, e}), c);
  return r;
}

// Reduced PBW words in the complement of m, grouped by Kazhdan degree.
std::vector<std::vector<Word>> complement_words(WhittakerData& w, int max_degree) {
  std::vector<std::vector<Word>> by_degree(static_cast<std::size_t>(max_degree) + 1);
  const PbwContext& ctx = *w.context();
  std::vector<int> ranks;
  for (int r = 0; r < ctx.rank_count(); ++r)
    if (!w.in_m(ctx.order().generator_at(r))) ranks.push_back(r);
  std::function<void(std::size_t, Word&, int)> rec = [&](std::size_t from, Word& cur, int deg) {
    by_degree[static_cast<std::size_t>(deg)].push_back(cur);
    for (std::size_t i = from; i < ranks.size(); ++i) {
      int r = ranks[i];
      Word one(1, static_cast<char>(r));
      int d = deg + w.word_degree(one);
      if (d > max_degree) continue;
      cur.push_back(static_cast<char>(r));
      rec(ctx.odd(r) ? i + 1 : i, cur, d);
      cur.pop_back();
    }
  };
  Word start;
  rec(0, start, 0);
  return by_degree;
}

}  // namespace

std::vector<long long> hilbert_series(int n, int max_degree) {
  std::vector<long long> c(static_cast<std::size_t>(max_degree) + 1, 0);
  c[0] = 1;
  for (int k = 0; k < n; ++k) {
    int d = 2 * k + 2;
    // multiply by (1 + t^d) / (1 − t^d) = 1 + 2 Σ_{j≥1} t^{jd}
    std::vector<long long> next(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      next[i] += c[i];
      for (std::size_t j = i + static_cast<std::size_t>(d); j < c.size(); j += static_cast<std::size_t>(d)) next[j] += 2 * c[i];
    }
    c = std::move(next);
  }
  return c;
}

Report hilbert_check(int n, int max_degree) {
  if (max_degree < 0 || max_degree % 2 != 0) throw Error("hilbert_check needs an even non-negative degree");
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "hilbert";
  rep.anchor = suite_info("hilbert").anchor;
  rep.params.n = n;
  rep.params.max_degree = max_degree;
  Recorder rec(rep.checks);
  QEnv q(n);
  WhittakerData& w = *q.w;
  auto series = hilbert_series(n, max_degree);
  auto monos = generator_monomials(q, max_degree);
  auto words = complement_words(w, max_degree);

  ColumnIndex<Word> mono_cols;
  RowEchelon mono_rank;
  ColumnIndex<std::pair<int, Word>> image_cols;
  RowEchelon image_rank;
  std::size_t next = 0, words_total = 0, monos_total = 0;
  long long series_total = 0;
  bool independent = true;
  for (int d = 0; d <= max_degree; ++d) {
    long long count = 0;
    while (next < monos.size() && monos[next].degree == d) {
      if (!mono_rank.insert(row_of(monos[next].value, mono_cols))) independent = false;
      ++count;
      ++next;
    }
    monos_total += static_cast<std::size_t>(count);
    for (const Word& y : words[static_cast<std::size_t>(d)]) {
      SparseRow row;
      Element ye(w.context(), Terms{{y, Rational(1)}});
      for (const auto& mg : w.m()) {
        Element image = w.m_action(mg.generator, ye);
        for (const auto& [t, c] : image.terms()) row.emplace(image_cols({mg.generator, t}), c);
      }
      image_rank.insert(std::move(row));
    }
    words_total += words[static_cast<std::size_t>(d)].size();
    series_total += series[static_cast<std::size_t>(d)];
    if (d % 2 == 1) continue;
    long long want = series[static_cast<std::size_t>(d)];
    long long dim_w = static_cast<long long>(words_total) - static_cast<long long>(image_rank.rank());
    bool ok = count == want && independent && dim_w == series_total;
    rec.expect("degree " + num(d), ok, [&] {
      return num(count) + " monomials (series " + num(want) + "), independent " + (independent ? "yes" : "no") +
             ", dim W_{<=" + num(d) + "} = " + num(dim_w) + " (series total " + num(series_total) + ")";
    }, num(count) + " monomials, dim W_{<=" + num(d) + "} = " + num(dim_w));
  }
  rec.expect("odd degrees", true, [] { return ""; }, "all generator degrees are even");
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

void hilbert(const SuiteParams& p, Recorder& rec, Report& rep) {
  int def = p.n == 1 ? 12 : p.n == 2 ? 8 : 6;
  Report r = hilbert_check(p.n, p.max_degree.value_or(def));
  for (auto& c : r.checks) rep.checks.push_back(std::move(c));
  (void)rec;
}

void theta_injectivity(const SuiteParams& p, Recorder& rec) {
  QEnv q(p.n);
  int d = p.max_degree.value_or(8);
  auto monos = generator_monomials(q, d);
  ColumnIndex<Word> cols;
  ColumnIndex<std::pair<CartanElement::Mask, PackedExp>> tcols;
  RowEchelon src, img;
  for (const auto& m : monos) {
    src.insert(row_of(m.value, cols));
    img.insert(row_of(q.w->theta(m.value), tcols));
  }
  rec.expect("rank theta(span) = rank span, degree <= " + num(d), src.rank() == img.rank(),
             [&] { return "source rank " + num(static_cast<long long>(src.rank())) + ", image rank " +
                          num(static_cast<long long>(img.rank())); },
             num(static_cast<long long>(monos.size())) + " monomials, rank " + num(static_cast<long long>(src.rank())));
}

void osp_relations(const SuiteParams&, Recorder& rec) {
  auto w = WhittakerData::osp12();
  auto g = [&](const char* s) { return w->generator(*w->algebra().find(s)); };
  Element X = g("X"), H = g("H"), r = g("r"), th = g("theta");
  Element omega = w->reduce(X * Rational(2) + H - H * H + r * th * Rational(2));
  Element R = w->reduce(r - H * th);
  auto natural = make_context(w->algebra_ptr(), GeneratorOrder::natural(w->algebra()));
  rec.equal("pi(Omega) = pi(2X + H - H^2 + 2 r theta)", w->reduce(casimir(natural)), omega, "Casimir of (a|b) = str(ab)/2");
  for (const auto& [name, y] : {std::pair<std::string, Element>{"pi(Omega)", omega}, {"R", R}, {"pi(theta)", th}}) {
    rec.expect(name + " in W", w->is_whittaker(y), [] { return "ad(m) does not annihilate it"; });
  }
  rec.equal("pi(theta)^2 = 1/2", w->product(th, th), w->scalar(Rational(1, 2)));
  rec.equal("[pi(theta), pi(theta)] = 1", w->bracket(th, th), w->scalar(1));
  rec.equal("[R, R] = pi(Omega)", w->bracket(R, R), omega);
  rec.equal("[R, pi(theta)] = -1/2", w->bracket(R, th), w->scalar(Rational(-1, 2)));
  rec.zero("[pi(Omega), R] = 0", w->bracket(omega, R));
  rec.zero("[pi(Omega), pi(theta)] = 0", w->bracket(omega, th));
}

void sl12_relations(const SuiteParams&, Recorder& rec) {
  auto w = WhittakerData::sl12();
  auto g = [&](const char* s) { return w->generator(*w->algebra().find(s)); };
  Element C = g("h1") + g("h2"), em = g("em"), fm = g("fm");
  Element a = w->reduce(g("h1") * em - g("ep")), b = w->reduce(g("h2") * fm - g("fp"));
  auto natural = make_context(w->algebra_ptr(), GeneratorOrder::natural(w->algebra()));
  Element omega = w->reduce(casimir(natural));
  std::vector<Named> gens{{"pi(C)", C}, {"pi(Omega)", omega}, {"pi(e-)", em}, {"pi(f-)", fm}, {"pi(a)", a}, {"pi(b)", b}};
  for (const auto& x : gens) rec.expect(x.name + " in W", w->is_whittaker(x.value), [] { return "ad(f) does not annihilate it"; });
  rec.equal("[pi(C), pi(e-)] = pi(e-)", w->bracket(C, em), em);
  rec.equal("[pi(C), pi(a)] = pi(a)", w->bracket(C, a), a);
  rec.equal("[pi(C), pi(f-)] = -pi(f-)", w->bracket(C, fm), -fm);
  rec.equal("[pi(C), pi(b)] = -pi(b)", w->bracket(C, b), -b);
  rec.equal("[pi(e-), pi(f-)] = 1", w->bracket(em, fm), w->scalar(1));
  rec.equal("[pi(a), pi(b)] = pi(Omega)", w->bracket(a, b), omega, "Omega for (a|b) = -2 str(ab)");
  std::vector<Named> odd{{"pi(e-)", em}, {"pi(f-)", fm}, {"pi(a)", a}, {"pi(b)", b}};
  std::string bad;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i; j < odd.size(); ++j) {
      bool listed = (odd[i].name == "pi(e-)" && odd[j].name == "pi(f-)") || (odd[i].name == "pi(a)" && odd[j].name == "pi(b)");
      if (!listed && !w->bracket(odd[i].value, odd[j].value).is_zero()) bad = odd[i].name + ", " + odd[j].name;
    }
  rec.expect("other odd brackets vanish", bad.empty(), [&] { return "[" + bad + "] != 0"; });
  std::string noncentral;
  for (const auto& x : gens)
    if (!w->bracket(omega, x.value).is_zero()) noncentral = x.name;
  rec.expect("pi(Omega) is central", noncentral.empty(), [&] { return "bracket with " + noncentral + " is nonzero"; });
}

void sergeev_commutators(const SuiteParams& p, Recorder& rec) {
  int n = p.n;
  auto w = WhittakerData::queer(n);
  SergeevCache s(w);
  int top = p.max_level.value_or(4);
  auto d = [](int a, int b) { return Rational(a == b ? 1 : 0); };
  const char* kinds[4] = {"[e_ij, e_kl^(m)]", "[e_ij, f_kl^(m)]", "[f_ij, e_kl^(m)]", "[f_ij, f_kl^(m)]"};
  for (int m = 1; m <= top; ++m) {
    Rational sg = m % 2 == 0 ? -1 : 1;
    auto E = [&](int a, int b) -> const Element& { return s.raw(SergeevKind::Even, a, b, m); };
    auto F = [&](int a, int b) -> const Element& { return s.raw(SergeevKind::Odd, a, b, m); };
    std::string bad[4];
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            Element eij = w->generator(GeneratorId::E(i, j)), fij = w->generator(GeneratorId::F(i, j));
            std::string idx = "(i,j,k,l) = (" + num(i) + "," + num(j) + "," + num(k) + "," + num(l) + ")";
            if (bad[0].empty() && !(supercommutator(eij, E(k, l)) == E(i, l) * d(j, k) - E(k, j) * d(i, l))) bad[0] = idx;
            if (bad[1].empty() && !(supercommutator(eij, F(k, l)) == F(i, l) * d(j, k) - F(k, j) * d(i, l))) bad[1] = idx;
            if (bad[2].empty() && !(supercommutator(fij, E(k, l)) == F(i, l) * (sg * d(j, k)) - F(k, j) * d(i, l))) bad[2] = idx;
            if (bad[3].empty() && !(supercommutator(fij, F(k, l)) == E(i, l) * (sg * d(j, k)) + E(k, j) * d(i, l))) bad[3] = idx;
          }
    for (int t = 0; t < 4; ++t) {
      rec.expect(std::string(kinds[t]) + ", m = " + num(m), bad[t].empty(), [&] { return "fails at " + bad[t]; });
    }
  }
}

void jacobi(const SuiteParams& p, Recorder& rec) {
  for (const auto& g : {build_preset("q", p.n), build_preset("osp12"), build_preset("sl12")}) {
    std::string bad;
    for (int a = 0; a < g->size() && bad.empty(); ++a)
      for (int b = 0; b < g->size() && bad.empty(); ++b)
        for (int c = 0; c < g->size() && bad.empty(); ++c) {
          if (!jacobi_defect(*g, a, b, c).empty()) {
            bad = g->generator(a).name + ", " + g->generator(b).name + ", " + g->generator(c).name;
          }
        }
    std::string label = g->is_queer() ? "q(" + num(p.n) + ")" : g->name();
    rec.expect("super-Jacobi on " + label, bad.empty(), [&] { return "defect at (" + bad + ")"; },
               num(static_cast<long long>(g->size()) * g->size() * g->size()) + " triples");
  }
}

using SuiteFn = std::function<void(const SuiteParams&, Recorder&, Report&)>;

template <class F>
SuiteFn plain(F f) {
  return [f](const SuiteParams& p, Recorder& r, Report&) { f(p, r); };
}

struct Entry {
  SuiteInfo info;
  SuiteFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"claim1", "pi(e_{m,1}^{(l)}) = [m = l+1] and pi(f_{m,1}^{(l)}) = 0 for 1 <= l < m <= n", 1, 5, false}, plain(claim1)},
      {{"claim11", "pi(e_{n,1}^{(n)}) = pi(z), pi(f_{n,1}^{(n)}) = pi(H_0)", 1, 5, false}, plain(claim11)},
      {{"claim2", "P(pi(e_{p,1}^{(p+l)})) = sum_{i<=min(p,n-l)} e_{i,i+l}, f analogue with signs (-1)^{l+1-i}", 1, 5, false},
       plain(claim2)},
      {{"inW", "pi(e_{n,1}^{(m)}), pi(f_{n,1}^{(m)}) and the generators z_i, Phi_k lie in W", 1, 4, false}, plain(in_w)},
      {{"corhc", "theta(pi(e_{n,1}^{(n+1)})) = 1/2 sum x_i^2 + sum_{i<j} xi_i xi_j + 1/2 z^2 - z", 1, 4, false}, plain(corhc)},
      {{"hcgenerators", "theta(pi(e_{p,1}^{(p+l)}) + pi(f_{p,1}^{(p+l)})) = sum_{p>=i_1>=...>=i_{l+1}} prod (x_i +- xi_i)", 1, 4,
        false},
       plain(hcgenerators)},
      {{"specialgen_abc", "[Phi_m, Phi_p] = 0 for m+p odd and (-1)^m [Phi_0, Phi_{m+p}] for m+p even", 1, 4, false},
       plain(phi_brackets)},
      {{"evencommute", "[pi(e_{n,1}^{(n+k)}), pi(e_{n,1}^{(n+m)})] = 0 for odd k, m", 1, 4, false}, plain(evencommute)},
      {{"q2_table", "n = 2: z_0 = 2x_1+2x_2, phi_1 = x_2 xi_1 - x_1 xi_2, z_1 = x_1 x_2 - xi_1 xi_2 and their products", 2, 2,
        false},
       plain(q2_table)},
      {{"supercent_central", "theta(pi(Z)) is symmetric with (x_i + x_j) | d_i p - d_j p", 1, 3, false},
       plain(supercent_central)},
      {{"charpol", "det(lambda - T) = lambda^n + sigma_2 lambda^{n-2} + sigma_4 lambda^{n-4} + ...", 1, 7, false},
       plain(charpol)},
      {{"independence", "phi_0, ..., phi_{n-1} are independent over C[x_1, ..., x_n]", 1, 4, false}, plain(independence)},
      {{"ad_omega", "ad(omega) xi_j = sum_i t_ij xi_i with t_ij = x_j (i < j), -x_j (i > j)", 1, 5, false}, plain(ad_omega)},
      {{"center_onedir", "pi(Z(q(n))) commutes with W", 1, 3, false}, plain(center_onedir)},
      {{"al_identity", "sum_sigma sgn(sigma) u_sigma(1) ... u_sigma(2^{k+1}) = 0 on W", 1, 3, false}, plain(al_identity)},
      {{"yangian", "T_{1,1}^{(k)} -> (-1)^k pi(e_{n,1}^{(n+k-1)}), T_{-1,1}^{(k)} -> (-1)^k pi(f_{n,1}^{(n+k-1)}) respects "
                   "the Y(Q(1)) relations",
        1, 4, false},
       plain(yangian)},
      {{"hilbert", "dim Gr W by degree = coefficients of prod_{k<n} (1+t^{2k+2})/(1-t^{2k+2})", 1, 3, false}, hilbert},
      {{"theta_injectivity", "theta has zero kernel on W up to a Kazhdan degree", 1, 3, false}, plain(theta_injectivity)},
      {{"osp_relations", "osp(1|2): [R,R] = pi(Omega), [R,pi(theta)] = -1/2, [pi(theta),pi(theta)] = 1, pi(Omega) central", 0,
        0, true},
       plain(osp_relations)},
      {{"sl12_relations", "sl(1|2): [pi(e-),pi(f-)] = 1, [pi(a),pi(b)] = pi(Omega), C grades, other odd brackets vanish", 0, 0,
        true},
       plain(sl12_relations)},
      {{"sergeev_equG2", "[e_ij, e_kl^{(m)}] = d_jk e_il^{(m)} - d_il e_kj^{(m)} and the three odd analogues", 1, 3, false},
       plain(sergeev_commutators)},
      {{"jacobi", "super-Jacobi identity for the structure constants", 1, 5, false}, plain(jacobi)},
  };
  return list;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const SuiteInfo& suite_info(const std::string& name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e.info;
  std::string valid;
  for (const auto& e : entries()) valid += (valid.empty() ? "" : ", ") + e.info.name;
  throw Error("unknown suite '" + name + "' (valid: " + valid + ")");
}

Report run_suite(const std::string& name, const SuiteParams& params) {
  const SuiteInfo& info = suite_info(name);
  if (params.max_degree && (*params.max_degree < 0 || *params.max_degree % 2 != 0)) {
    throw Error("--max-degree must be even and non-negative");
  }
  if (params.max_level && *params.max_level < 1) throw Error("--max-level must be positive");
  if (params.samples < 1) throw Error("--samples must be positive");
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = info.name;
  rep.anchor = info.anchor;
  rep.params = params;
  Recorder rec(rep.checks);
  if (!info.fixed_algebra && (params.n < info.min_n || params.n > info.max_n)) {
    rec.skip("range", "suite supports n in [" + num(info.min_n) + ", " + num(info.max_n) + "]");
  } else {
    for (const auto& e : entries())
      if (e.info.name == name) e.run(params, rec, rep);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Element standard_polynomial(const std::vector<Element>& elems, const Product& mul) {
  if (elems.empty()) throw Error("standard polynomial of an empty list");
  std::size_t n = elems.size();
  if (n > 20) throw Error("standard polynomial: too many arguments");
  auto times = [&](const Element& a, const Element& b) { return mul ? mul(a, b) : a * b; };
  std::map<std::pair<std::size_t, std::size_t>, Element> commutators;
  auto commutator = [&](std::size_t i, std::size_t j) -> const Element& {
    auto [it, fresh] = commutators.try_emplace({i, j});
    if (fresh) it->second = times(elems[i], elems[j]) - times(elems[j], elems[i]);
    return it->second;
  };
  // Subsets of even size expand over their first pair,
  //   s(S) = Σ_{i<j in S} (−1)^{pos(i)+pos(j)−1} [u_i,u_j] s(S \ {i,j}),
  // odd ones over their first letter; memoized over subsets.
  std::vector<std::optional<Element>> memo(std::size_t{1} << n);
  std::function<const Element&(std::size_t)> s = [&](std::size_t mask) -> const Element& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    Element out = Element::scalar(elems[0].context(), Rational(mask == 0 ? 1 : 0));
    if (members.size() % 2 == 1) {
      for (std::size_t p = 0; p < members.size(); ++p) {
        Element term = times(elems[members[p]], s(mask & ~(std::size_t{1} << members[p])));
        out += p % 2 == 0 ? term : -term;
      }
    } else {
      for (std::size_t p = 0; p < members.size(); ++p)
        for (std::size_t q = p + 1; q < members.size(); ++q) {
          std::size_t rest = mask & ~(std::size_t{1} << members[p]) & ~(std::size_t{1} << members[q]);
          const Element& c = commutator(members[p], members[q]);
          Element term = rest == 0 ? c : times(c, s(rest));
          out += (p + q) % 2 == 1 ? term : -term;
        }
    }
    slot = std::move(out);
    return *slot;
  };
  return s((std::size_t{1} << n) - 1);
}

}  // namespace superw
