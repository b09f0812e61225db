#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "superw/whittaker.hpp"

using namespace superw;

namespace {

Terms oracle_reduce(WhittakerData& w, const oracle::FreeWord& word) {
  oracle::FreeTerms in;
  in[word] = 1;
  auto out = oracle::reduce(
      w.algebra(), w.context()->order(), in, [&](int g) { return w.in_m(g); }, [&](int g) { return w.chi(g); });
  return oracle::to_terms(*w.context(), out);
}

Element random_reduced(WhittakerData& w, std::mt19937_64& rng, int max_len) {
  std::vector<int> comp;
  for (int g = 0; g < w.algebra().size(); ++g)
    if (!w.in_m(g)) comp.push_back(g);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(comp.size()) - 1), len(0, max_len),
      coef(-2, 2);
  Element out = w.zero();
  for (int t = 0; t < 3; ++t) {
    std::vector<int> word(static_cast<std::size_t>(len(rng)));
    for (auto& x : word) x = comp[static_cast<std::size_t>(pick(rng))];
    out += w.reduce(Element::from_word(w.context(), word)) * Rational(coef(rng));
  }
  return out;
}

}  // namespace

TEST_CASE("reduction examples in q(2)") {
  auto w = WhittakerData::queer(2);
  CHECK(w->reduce(w->generator(GeneratorId::E(2, 1))) == w->scalar(1));
  CHECK(w->reduce(w->generator(GeneratorId::F(2, 1))).is_zero());
  Element e11 = w->generator(GeneratorId::E(1, 1));
  CHECK(w->reduce(e11 * w->generator(GeneratorId::E(2, 1))) == e11);
  CHECK(w->chi_vanishes_on_brackets());
  CHECK(!w->residual_odd().has_value());
}

TEST_CASE("reduction agrees with the oracle on random words") {
  for (int n = 2; n <= 3; ++n) {
    auto w = WhittakerData::queer(n);
    auto natural = make_context(w->algebra_ptr(), GeneratorOrder::natural(w->algebra()));
    std::mt19937_64 rng(static_cast<unsigned>(40 + n));
    for (int t = 0; t < 60; ++t) {
      auto word = oracle::random_word(rng, w->algebra().size(), 5);
      CHECK(w->reduce(Element::from_word(natural, word)).terms() == oracle_reduce(*w, word));
    }
  }
}

TEST_CASE("reduce annihilates the left ideal") {
  for (int n = 1; n <= 3; ++n) {
    auto w = WhittakerData::queer(n);
    auto natural = make_context(w->algebra_ptr(), GeneratorOrder::natural(w->algebra()));
    std::mt19937_64 rng(static_cast<unsigned>(n));
    for (int t = 0; t < 100; ++t) {
      auto word = oracle::random_word(rng, w->algebra().size(), 3);
      Element u = Element::from_word(natural, word);
      for (const auto& mg : w->m()) {
        Element a = Element::generator(natural, mg.generator) - Element::scalar(natural, mg.chi);
        CHECK(w->reduce(u * a).is_zero());
      }
    }
  }
}

TEST_CASE("membership test") {
  auto w = WhittakerData::queer(2);
  CHECK(w->is_whittaker(w->scalar(1)));
  CHECK(!w->is_whittaker(w->generator(GeneratorId::E(1, 2))));
  Element z = w->generator(GeneratorId::E(1, 1)) + w->generator(GeneratorId::E(2, 2));
  CHECK(w->is_whittaker(z));
  Element h0 = w->generator(GeneratorId::F(1, 1)) - w->generator(GeneratorId::F(2, 2));
  CHECK(w->is_whittaker(h0));
  CHECK(w->certify("H0", h0).has_value());
  CHECK(!w->certify("e12", w->generator(GeneratorId::E(1, 2))).has_value());
}

TEST_CASE("m-action is ad(m) on the quotient") {
  auto w = WhittakerData::queer(3);
  auto natural = make_context(w->algebra_ptr(), GeneratorOrder::natural(w->algebra()));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    Element y = random_reduced(*w, rng, 3);
    Element lifted = restraighten(y, natural);
    for (const auto& mg : w->m()) {
      Element a = Element::generator(natural, mg.generator);
      CHECK(w->m_action(mg.generator, y) == w->reduce(supercommutator(a, lifted)));
    }
  }
}

TEST_CASE("Kazhdan degree and top symbol") {
  auto w = WhittakerData::queer(3);
  CHECK(w->kazhdan_degree(w->scalar(1)) == 0);
  CHECK(w->kazhdan_degree(w->generator(GeneratorId::E(1, 1))) == 2);
  Element e13 = w->generator(GeneratorId::E(1, 3));
  Element y = e13 + w->generator(GeneratorId::E(1, 1)) * w->generator(GeneratorId::E(1, 2)) +
              w->generator(GeneratorId::F(2, 2));
  CHECK(w->kazhdan_degree(y) == 6);
  CHECK(w->top_symbol(y) == e13);
  CHECK(w->top_symbol(w->scalar(1)) == w->scalar(1));
  CHECK_THROWS_AS(w->kazhdan_degree(w->zero()), Error);
}

TEST_CASE("theta on simple elements") {
  auto w = WhittakerData::queer(2);
  int n = 2;
  CHECK(w->theta(w->scalar(1)) == CartanElement::scalar(n, 1));
  CHECK(w->theta(w->generator(GeneratorId::E(1, 2))).is_zero());
  CHECK(w->theta(w->generator(GeneratorId::F(2, 2))) == -CartanElement::xi(n, 2));
  Element f11 = w->generator(GeneratorId::F(1, 1)), f22 = w->generator(GeneratorId::F(2, 2));
  CHECK(w->theta(f11 * f22) == -(CartanElement::xi(n, 1) * CartanElement::xi(n, 2)));
  CHECK(w->theta(f11 * f11) == CartanElement::x(n, 1));
  CHECK_THROWS_AS(WhittakerData::osp12()->theta(WhittakerData::osp12()->scalar(1)), Error);
}

TEST_CASE("theta is multiplicative on U(b) modulo nothing lost") {
  auto w = WhittakerData::queer(3);
  std::mt19937_64 rng(12);
  // ϑ is a homomorphism on U(b) because n U(b) is a two-sided ideal of U(b).
  for (int t = 0; t < 30; ++t) {
    Element a = random_reduced(*w, rng, 3), b = random_reduced(*w, rng, 3);
    CHECK(w->theta(w->product(a, b)) == w->theta(a) * w->theta(b));
  }
}

TEST_CASE("osp(1|2) Whittaker data") {
  auto w = WhittakerData::osp12();
  const auto& g = w->algebra();
  int th = *g.find("theta");
  REQUIRE(w->residual_odd().has_value());
  CHECK(*w->residual_odd() == th);
  CHECK(w->residual_chi() == Rational(1));
  Element pt = w->generator(th);
  CHECK(w->is_whittaker(pt));
  CHECK(w->product(pt, pt) == w->scalar(Rational(1, 2)));
  CHECK(w->chi_vanishes_on_brackets());
}

TEST_CASE("Casimir elements are central") {
  for (const char* name : {"osp12", "sl12"}) {
    auto g = build_preset(name);
    auto ctx = make_context(g, GeneratorOrder::natural(*g));
    Element omega = casimir(ctx);
    for (int a = 0; a < g->size(); ++a) {
      CHECK_MESSAGE(supercommutator(omega, Element::generator(ctx, a)).is_zero(), name);
    }
  }
}
