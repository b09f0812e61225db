#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "superw/verify.hpp"
#include "superw/whittaker.hpp"

using namespace superw;

TEST_CASE("Hilbert series coefficients") {
  CHECK(hilbert_series(1, 6) == std::vector<long long>{1, 0, 2, 0, 2, 0, 2});
  // (1+t²)(1+t⁴)/((1−t²)(1−t⁴)) = 1 + 2t² + 4t⁴ + 6t⁶ + 8t⁸ + ...
  CHECK(hilbert_series(2, 8) == std::vector<long long>{1, 0, 2, 0, 4, 0, 6, 0, 8});
  auto s3 = hilbert_series(3, 6);
  CHECK(s3[6] == 8);
}

TEST_CASE("Hilbert check for n = 1") {
  Report r = hilbert_check(1, 4);
  CHECK(r.passed());
  REQUIRE(r.checks.size() == 4);
  CHECK(r.checks[0].detail.find("1 monomials") == 0);
  CHECK(r.checks[2].detail.find("2 monomials") == 0);
  CHECK_THROWS_AS(hilbert_check(1, 5), Error);
  CHECK_THROWS_AS(run_suite("hilbert", {.n = 1, .max_degree = 3}), Error);
}

TEST_CASE("standard polynomial") {
  auto w = WhittakerData::queer(2);
  Element a = w->generator(GeneratorId::E(1, 2)), b = w->generator(GeneratorId::E(2, 1));
  Element c = w->generator(GeneratorId::E(1, 1));
  CHECK(standard_polynomial({a}) == a);
  CHECK(standard_polynomial({a, b}) == a * b - b * a);
  // s_3(u, v, w) = Σ sgn(σ) products over all six orders
  Element s3 = a * b * c - a * c * b - b * a * c + b * c * a + c * a * b - c * b * a;
  CHECK(standard_polynomial({a, b, c}) == s3);
  // s_4 and s_5 against the sum over all permutations
  Element d = w->generator(GeneratorId::F(1, 2)), e = w->generator(GeneratorId::F(2, 2));
  std::vector<Element> u{a, b, c, d, e};
  for (std::size_t len : {4u, 5u}) {
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    Element brute = w->zero();
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) inversions += perm[i] > perm[j];
      Element term = w->scalar(1);
      for (int k : perm) term = term * u[static_cast<std::size_t>(k)];
      brute += inversions % 2 == 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(standard_polynomial(std::vector<Element>(u.begin(), u.begin() + static_cast<long>(len))) == brute);
  }
  Element z = w->generator(GeneratorId::E(1, 1)) + w->generator(GeneratorId::E(2, 2));
  CHECK(standard_polynomial({z, z * z, z + w->scalar(1)}).is_zero());
  CHECK(standard_polynomial({a, a}).is_zero());
  CHECK_THROWS_AS(standard_polynomial({}), Error);
  // a custom product is used for every factor
  int calls = 0;
  auto counting = [&](const Element& x, const Element& y) {
    ++calls;
    return x * y;
  };
  CHECK(standard_polynomial({a, b, c}, counting) == s3);
  CHECK(calls > 0);
}

TEST_CASE("suite registry and plumbing") {
  std::set<std::string> names;
  for (const auto& s : suite_registry()) {
    CHECK(names.insert(s.name).second);
    CHECK(!s.anchor.empty());
    CHECK(suite_info(s.name).name == s.name);
  }
  CHECK(names.size() == 22);
  try {
    run_suite("no_such_suite", {});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("claim1") != std::string::npos);
  }
  Report out = run_suite("q2_table", {.n = 3});
  REQUIRE(out.checks.size() == 1);
  CHECK(out.checks[0].status == Status::Skipped);
  CHECK(out.passed());
  CHECK_THROWS_AS(run_suite("al_identity", {.n = 2, .samples = 0}), Error);
  CHECK(status_name(Status::Skipped) == "skipped");
}

TEST_CASE("suites pass at n = 2 and reports are deterministic") {
  for (const char* name : {"claim1", "claim11", "claim2", "corhc", "hcgenerators", "specialgen_abc", "q2_table",
                           "charpol", "independence", "ad_omega", "osp_relations", "sl12_relations"}) {
    Report r = run_suite(name, {.n = 2});
    CHECK_MESSAGE(r.passed(), name);
    CHECK_MESSAGE(r.count(Status::Pass) > 0, name);
  }
  SuiteParams p{.n = 2, .seed = 7, .samples = 5};
  Report a = run_suite("al_identity", p), b = run_suite("al_identity", p);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
  CHECK(a.checks[0].detail.find("seed 7") != std::string::npos);
}

TEST_CASE("claim11 is a single check") {
  for (int n = 1; n <= 3; ++n) {
    Report r = run_suite("claim11", {.n = n});
    CHECK(r.checks.size() == 1);
    CHECK(r.passed());
  }
}
