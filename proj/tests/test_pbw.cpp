#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "superw/pbw.hpp"

using namespace superw;

namespace {

ContextPtr natural_context(const AlgebraPtr& g) { return make_context(g, GeneratorOrder::natural(*g)); }

Element gen(const ContextPtr& ctx, GeneratorId id) { return Element::generator(ctx, id); }

Element random_element(const ContextPtr& ctx, std::mt19937_64& rng, int max_len, int terms) {
  Element e(ctx);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < terms; ++t) {
    auto w = oracle::random_word(rng, ctx->algebra().size(), max_len);
    e += Element::from_word(ctx, w) * Rational(coef(rng));
  }
  return e;
}

}  // namespace

TEST_CASE("unit law and odd squares") {
  auto g = build_preset("q", 2);
  auto ctx = natural_context(g);
  Element one = Element::scalar(ctx, 1);
  Element y = gen(ctx, GeneratorId::E(1, 2)) * gen(ctx, GeneratorId::F(2, 1));
  CHECK(one * y == y);
  CHECK(y * one == y);
  Element f11 = gen(ctx, GeneratorId::F(1, 1));
  CHECK(f11 * f11 == gen(ctx, GeneratorId::E(1, 1)));
}

TEST_CASE("straightening example against the oracle") {
  auto g = build_preset("q", 2);
  auto ctx = natural_context(g);  // e(1,2) precedes e(2,1)
  Element lhs = gen(ctx, GeneratorId::E(2, 1)) * gen(ctx, GeneratorId::E(1, 2));
  Element rhs = gen(ctx, GeneratorId::E(1, 2)) * gen(ctx, GeneratorId::E(2, 1)) -
                gen(ctx, GeneratorId::E(1, 1)) + gen(ctx, GeneratorId::E(2, 2));
  CHECK(lhs == rhs);
  CHECK(lhs.str() == "e(1,2)*e(2,1) - e(1,1) + e(2,2)");

  oracle::FreeTerms input;
  input[{g->index_of(GeneratorId::E(2, 1)), g->index_of(GeneratorId::E(1, 2))}] = 1;
  CHECK(oracle::to_terms(*ctx, oracle::normal_form(*g, ctx->order(), input)) == lhs.terms());
}

TEST_CASE("supercommutators of generators match the bracket table") {
  std::vector<AlgebraPtr> algebras = {build_preset("osp12"), build_preset("sl12"),
                                      build_preset("q", 2), build_preset("q", 3)};
  for (const auto& g : algebras) {
    auto ctx = natural_context(g);
    for (int a = 0; a < g->size(); ++a)
      for (int b = 0; b < g->size(); ++b) {
        Element br = supercommutator(Element::generator(ctx, a), Element::generator(ctx, b));
        CHECK(br == Element::from_combination(ctx, g->bracket(a, b)));
      }
  }
}

TEST_CASE("supercommutator examples") {
  auto g = build_preset("q", 2);
  auto ctx = natural_context(g);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    Element x = random_element(ctx, rng, 3, 3).part(Parity::Even);
    CHECK(supercommutator(x, x).is_zero());
  }
  Element f12 = gen(ctx, GeneratorId::F(1, 2));
  CHECK(supercommutator(f12, f12).is_zero());
  CHECK(supercommutator(gen(ctx, GeneratorId::E(1, 2)), gen(ctx, GeneratorId::E(2, 1))) ==
        gen(ctx, GeneratorId::E(1, 1)) - gen(ctx, GeneratorId::E(2, 2)));
}

TEST_CASE("normal form agrees with the word-rewriting oracle") {
  for (int n = 2; n <= 3; ++n) {
    auto g = build_preset("q", n);
    auto ctx = natural_context(g);
    std::mt19937_64 rng(static_cast<unsigned>(100 + n));
    for (int t = 0; t < 100; ++t) {
      auto w = oracle::random_word(rng, g->size(), 5);
      oracle::FreeTerms input;
      input[w] = 1;
      Element e = Element::from_word(ctx, w);
      CHECK(oracle::to_terms(*ctx, oracle::normal_form(*g, ctx->order(), input)) == e.terms());
    }
  }
}

TEST_CASE("associativity and parity homogeneity") {
  for (int n = 1; n <= 3; ++n) {
    auto g = build_preset("q", n);
    auto ctx = natural_context(g);
    std::mt19937_64 rng(static_cast<unsigned>(7 * n));
    for (int t = 0; t < 15; ++t) {
      Element a = random_element(ctx, rng, 3, 2);
      Element b = random_element(ctx, rng, 3, 2);
      Element c = random_element(ctx, rng, 3, 2);
      CHECK((a * b) * c == a * (b * c));
      for (Parity pa : {Parity::Even, Parity::Odd})
        for (Parity pb : {Parity::Even, Parity::Odd}) {
          Element prod = a.part(pa) * b.part(pb);
          CHECK(prod.is_homogeneous());
          if (!prod.is_zero()) CHECK(prod.parity() == pa + pb);
        }
    }
  }
}

TEST_CASE("restraighten round trip") {
  auto g = build_preset("q", 3);
  auto ctx1 = natural_context(g);
  std::vector<int> rev(static_cast<std::size_t>(g->size()));
  for (int i = 0; i < g->size(); ++i) rev[static_cast<std::size_t>(i)] = g->size() - 1 - i;
  auto ctx2 = make_context(g, GeneratorOrder(*g, rev));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Element a = random_element(ctx1, rng, 4, 2);
    Element b = restraighten(a, ctx2);
    CHECK(restraighten(b, ctx1) == a);
  }
  Element sorted = Element::from_word(ctx1, {0, 1});
  CHECK(restraighten(sorted, ctx1) == sorted);

  auto q2 = build_preset("q", 2);
  auto n1 = natural_context(q2);
  std::vector<int> seq(static_cast<std::size_t>(q2->size()));
  for (int i = 0; i < q2->size(); ++i) seq[static_cast<std::size_t>(i)] = i;
  std::swap(seq[1], seq[2]);  // e(1,2) and e(2,1) swap places
  auto n2 = make_context(q2, GeneratorOrder(*q2, seq));
  int e12 = q2->index_of(GeneratorId::E(1, 2)), e21 = q2->index_of(GeneratorId::E(2, 1));
  Element x = Element::from_word(n2, {e21, e12});
  Element y = restraighten(x, n1);
  CHECK(y.str() == "e(1,2)*e(2,1) - e(1,1) + e(2,2)");
  CHECK_THROWS_AS(restraighten(x, natural_context(g)), Error);
}

TEST_CASE("mismatched contexts are rejected") {
  auto g = build_preset("q", 2);
  auto c1 = natural_context(g);
  auto c2 = natural_context(g);
  CHECK_THROWS_AS(Element::generator(c1, 0) * Element::generator(c2, 0), Error);
}
