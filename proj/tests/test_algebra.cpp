#include "doctest.h"

#include <array>
#include <map>

#include "superw/algebra.hpp"

using namespace superw;

namespace {

Combination C(std::initializer_list<std::pair<int, Rational>> l) { return Combination(l); }

// Plain 3x3 integer supermatrices with parities (0,1,1); independent of SuperMatrix.
using M3 = std::array<std::array<int, 3>, 3>;

M3 mul(const M3& a, const M3& b) {
  M3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

TEST_CASE("q(1) preset") {
  auto g = build_preset("q", 1);
  REQUIRE(g->size() == 2);
  int e11 = g->index_of(GeneratorId::E(1, 1));
  int f11 = g->index_of(GeneratorId::F(1, 1));
  CHECK(g->parity(e11) == Parity::Even);
  CHECK(g->parity(f11) == Parity::Odd);
  CHECK(g->bracket(f11, f11) == C({{e11, 2}}));
}

TEST_CASE("q(2) brackets") {
  auto g = build_preset("q", 2);
  auto idx = [&](GeneratorId id) { return g->index_of(id); };
  CHECK(bracket_gen(*g, GeneratorId::F(1, 2), GeneratorId::F(2, 1)) ==
        C({{idx(GeneratorId::E(1, 1)), 1}, {idx(GeneratorId::E(2, 2)), 1}}));
  CHECK(bracket_gen(*g, GeneratorId::E(1, 2), GeneratorId::E(2, 1)) ==
        C({{idx(GeneratorId::E(1, 1)), 1}, {idx(GeneratorId::E(2, 2)), -1}}));
  CHECK(bracket_gen(*g, GeneratorId::E(1, 2), GeneratorId::F(2, 1)) ==
        C({{idx(GeneratorId::F(1, 1)), 1}, {idx(GeneratorId::F(2, 2)), -1}}));
  CHECK(bracket_gen(*g, GeneratorId::F(1, 2), GeneratorId::F(1, 2)).empty());
  CHECK_THROWS_AS(bracket_gen(*g, GeneratorId::E(3, 1), GeneratorId::E(1, 1)), Error);
  CHECK_THROWS_AS(bracket_gen(*g, GeneratorId::named(0), GeneratorId::E(1, 1)), Error);
}

TEST_CASE("q(n) brackets follow the matrix-unit rules") {
  for (int n = 1; n <= 3; ++n) {
    auto g = build_preset("q", n);
    auto e = [&](int i, int j) { return g->index_of(GeneratorId::E(i, j)); };
    auto f = [&](int i, int j) { return g->index_of(GeneratorId::F(i, j)); };
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            std::map<int, Rational> ee, ef, ff;
            if (j == k) { ee[e(i, l)] += 1; ef[f(i, l)] += 1; ff[e(i, l)] += 1; }
            if (i == l) { ee[e(k, j)] -= 1; ef[f(k, j)] -= 1; ff[e(k, j)] += 1; }
            auto as_comb = [](const std::map<int, Rational>& m) {
              Combination c;
              for (auto& [a, v] : m) if (!v.is_zero()) c.emplace_back(a, v);
              return c;
            };
            CHECK(g->bracket(e(i, j), e(k, l)) == as_comb(ee));
            CHECK(g->bracket(e(i, j), f(k, l)) == as_comb(ef));
            CHECK(g->bracket(f(i, j), f(k, l)) == as_comb(ff));
          }
  }
}

TEST_CASE("gradings of q(3)") {
  auto g = build_preset("q", 3);
  Grading a = grading(*g, GeneratorId::E(1, 2));
  CHECK(a.dynkin == 2);
  CHECK(a.weight == 2);
  CHECK(a.kazhdan == 4);
  CHECK(a.parity == Parity::Even);
  Grading b = grading(*g, GeneratorId::F(2, 1));
  CHECK(b.dynkin == -2);
  CHECK(b.weight == -2);
  CHECK(b.kazhdan == 0);
  CHECK(b.parity == Parity::Odd);
  Grading c = grading(*g, GeneratorId::E(1, 1));
  CHECK(c.dynkin == 0);
  CHECK(c.kazhdan == 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      CHECK(grading(*g, GeneratorId::E(i, j)).dynkin == 2 * (j - i));
      CHECK(grading(*g, GeneratorId::F(i, j)).dynkin == 2 * (j - i));
    }
}

TEST_CASE("preset errors") {
  CHECK_THROWS_AS(build_preset("gl", 2), Error);
  CHECK_THROWS_AS(build_preset("q", 0), Error);
  CHECK_THROWS_AS(build_preset("q"), Error);
  CHECK_THROWS_AS(build_preset("osp12", 2), Error);
  CHECK_THROWS_AS(build_preset("sl12", 1), Error);
}

TEST_CASE("osp(1|2) structure against an independent matrix oracle") {
  auto g = build_preset("osp12");
  int X = *g->find("X"), Y = *g->find("Y"), H = *g->find("H"), th = *g->find("theta"),
      r = *g->find("r");
  CHECK(g->bracket(th, th) == C({{Y, -2}}));
  M3 theta{}, Ym{};
  theta[0][1] = 1;
  theta[2][0] = -1;
  Ym[2][1] = 1;
  M3 sq = mul(theta, theta);
  // [theta, theta] = 2 theta^2 for an odd matrix
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(2 * sq[i][j] == -2 * Ym[i][j]);

  const auto& form = *g->form();
  CHECK(form[th][r] == Rational(1));
  CHECK(form[X][Y] == Rational(-1, 2));
  CHECK(form[H][H] == Rational(-1));
  CHECK(g->generator(X).dynkin == 2);
  CHECK(g->generator(r).dynkin == 1);
  CHECK(g->generator(H).dynkin == 0);
  CHECK(g->generator(th).dynkin == -1);
  CHECK(g->generator(Y).dynkin == -2);
}

TEST_CASE("sl(1|2) structure") {
  auto g = build_preset("sl12");
  int h1 = *g->find("h1"), h2 = *g->find("h2"), f = *g->find("f"), em = *g->find("em"),
      fm = *g->find("fm"), ep = *g->find("ep");
  CHECK(g->generator(f).dynkin == -2);
  CHECK(g->parity(f) == Parity::Even);
  CHECK(g->parity(em) == Parity::Odd);
  // [C, e-] = e- with C = h1 + h2
  Combination ce = g->bracket(h1, em);
  Combination ce2 = g->bracket(h2, em);
  std::map<int, Rational> sum;
  for (auto& [k, v] : ce) sum[k] += v;
  for (auto& [k, v] : ce2) sum[k] += v;
  CHECK(sum.size() == 1);
  CHECK(sum[em] == Rational(1));
  // [e-, f-] = E12 E31 + E31 E12 = E32 = f
  CHECK(g->bracket(em, fm) == C({{f, 1}}));
  CHECK(g->bracket(ep, ep).empty());
}

TEST_CASE("super-antisymmetry, grading compatibility and super-Jacobi") {
  std::vector<AlgebraPtr> algebras = {build_preset("osp12"), build_preset("sl12")};
  for (int n = 1; n <= 4; ++n) algebras.push_back(build_preset("q", n));
  for (const auto& g : algebras) {
    int N = g->size();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        int sign = (bit(g->parity(a)) && bit(g->parity(b))) ? 1 : -1;
        Combination ab = g->bracket(a, b);
        Combination ba = g->bracket(b, a);
        for (auto& [k, v] : ba) v *= Rational(sign);
        CHECK(ab == ba);
        for (const auto& [k, v] : ab) {
          CHECK(g->generator(k).dynkin == g->generator(a).dynkin + g->generator(b).dynkin);
          CHECK(g->parity(k) == g->parity(a) + g->parity(b));
        }
      }
    bool ok = true;
    for (int a = 0; a < N && ok; ++a)
      for (int b = 0; b < N && ok; ++b)
        for (int c = 0; c < N && ok; ++c) ok = jacobi_defect(*g, a, b, c).empty();
    CHECK_MESSAGE(ok, g->name());
  }
}
