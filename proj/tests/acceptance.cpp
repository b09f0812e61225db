// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "superw/cartan.hpp"
#include "superw/verify.hpp"
#include "superw/whittaker.hpp"

using namespace superw;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Runs suites and collects failures; every time limit is part of the verdict.
class Suites {
 public:
  void run(const std::string& name, SuiteParams p, double limit_seconds = 0) {
    auto start = Clock::now();
    Report r = run_suite(name, p);
    double t = since(start);
    checks_ += r.checks.size();
    for (const auto& c : r.checks)
      if (c.status == Status::Skipped && c.name == "range") fail(name + " n=" + std::to_string(p.n) + " is out of range");
    for (const auto& c : r.checks)
      if (c.status == Status::Fail) fail(name + " n=" + std::to_string(p.n) + ": " + c.name + " (" + c.detail + ")");
    if (limit_seconds > 0 && t > limit_seconds) {
      fail(name + " n=" + std::to_string(p.n) + " took " + std::to_string(t) + " s, limit " +
           std::to_string(limit_seconds) + " s");
    }
    timing_ << (timing_.tellp() > 0 ? ", " : "") << name;
    if (!suite_info(name).fixed_algebra) timing_ << "(n=" << p.n << ")";
    timing_ << " " << format(t);
  }

  void fail(const std::string& why) {
    out_.pass = false;
    if (out_.detail.empty()) out_.detail = why;
  }

  Outcome outcome() {
    if (out_.pass) out_.detail = std::to_string(checks_) + " checks; " + timing_.str();
    return out_;
  }

  static std::string format(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1fs", t);
    return buf;
  }

 private:
  Outcome out_;
  std::size_t checks_ = 0;
  std::ostringstream timing_;
};

Outcome sergeev_identities() {
  Suites s;
  for (int n : {2, 3, 4}) {
    double limit = n <= 3 ? 60 : 600;
    auto start = Clock::now();
    for (const char* name : {"claim1", "claim11", "claim2"}) s.run(name, {.n = n});
    if (since(start) > limit) s.fail("n=" + std::to_string(n) + " exceeded " + std::to_string(limit) + " s");
  }
  return s.outcome();
}

Outcome casimir_element() {
  Suites s;
  for (int n : {2, 3, 4}) s.run("corhc", {.n = n});
  return s.outcome();
}

Outcome harish_chandra_images() {
  Suites s;
  for (int n : {2, 3}) s.run("hcgenerators", {.n = n});
  return s.outcome();
}

Outcome generator_structure() {
  Suites s;
  for (int n : {2, 3, 4}) {
    s.run("inW", {.n = n});
    s.run("specialgen_abc", {.n = n});
    s.run("evencommute", {.n = n, .exhaustive = true});
  }
  return s.outcome();
}

Outcome q2_table() {
  Suites s;
  s.run("q2_table", {.n = 2});
  return s.outcome();
}

Outcome characteristic_polynomial() {
  Suites s;
  auto start = Clock::now();
  for (int n = 1; n <= 6; ++n) s.run("charpol", {.n = n});
  if (since(start) > 60) s.fail("charpol n = 1..6 exceeded 60 s");
  return s.outcome();
}

Outcome independence() {
  Suites s;
  for (int n : {1, 2, 3}) s.run("independence", {.n = n});
  return s.outcome();
}

Outcome amitsur_levitzki() {
  Suites s;
  for (int n : {2, 3}) s.run("al_identity", {.n = n, .seed = 1, .samples = 100}, 300);
  return s.outcome();
}

Outcome yangian() {
  Suites s;
  s.run("yangian", {.n = 2, .max_level = 4}, 600);
  s.run("yangian", {.n = 3, .max_level = 3}, 600);
  return s.outcome();
}

Outcome hilbert() {
  Suites s;
  s.run("hilbert", {.n = 1, .max_degree = 12});
  s.run("hilbert", {.n = 2, .max_degree = 8});
  return s.outcome();
}

Outcome presets() {
  Suites s;
  s.run("osp_relations", {});
  s.run("sl12_relations", {});
  return s.outcome();
}

// Straightening and π against the word-rewriting oracle on seeded random words.
Outcome oracle_equivalence() {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> pick_n(1, 3);
  Outcome out;
  int compared = 0;
  for (int sample = 0; sample < 100; ++sample) {
    int n = pick_n(rng);
    auto w = WhittakerData::queer(n);
    const AlgebraSpec& g = w->algebra();
    oracle::FreeWord word = oracle::random_word(rng, g.size(), 5);
    oracle::FreeTerms in;
    in[word] = 1;
    Element engine = Element::from_word(w->context(), word);
    Terms expect = oracle::to_terms(*w->context(), oracle::normal_form(g, w->context()->order(), in));
    Terms expect_reduced = oracle::to_terms(
        *w->context(),
        oracle::reduce(g, w->context()->order(), in, [&](int x) { return w->in_m(x); }, [&](int x) { return w->chi(x); }));
    Element reduced = w->reduce(engine);
    ++compared;
    if (engine.terms() != expect || reduced.terms() != expect_reduced) {
      std::string text;
      for (int x : word) text += (text.empty() ? "" : "*") + g.generator(x).name;
      out.pass = false;
      out.detail = "mismatch at n=" + std::to_string(n) + " on " + text;
      return out;
    }
  }
  out.detail = std::to_string(compared) + " words agree (normal form and pi)";
  return out;
}

Outcome theta_injectivity() {
  Suites s;
  for (int n : {2, 3}) s.run("theta_injectivity", {.n = n, .max_degree = 8});
  return s.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Sergeev identities claim1/claim11/claim2, n = 2, 3, 4 (n <= 3 under 1 min, n = 4 under 10 min)",
       sergeev_identities},
      {"explicit Casimir-type element pi(e_{n,1}^{(n+1)}) and its theta image, n = 2, 3, 4", casimir_element},
      {"Harish-Chandra images, even/odd split for k = 1..n, n = 2, 3", harish_chandra_images},
      {"generator structure: membership in W, even commutation, Phi brackets, n = 2, 3, 4", generator_structure},
      {"q(2) table: z_0, phi_1, z_1 and five relations", q2_table},
      {"characteristic polynomial of T, n = 1..6 (under 1 min)", characteristic_polynomial},
      {"independence determinant nonzero, n = 1, 2, 3", independence},
      {"Amitsur-Levitzki s_4 on 100 seeded quadruples, n = 2, 3 (under 5 min each)", amitsur_levitzki},
      {"Yangian relations, m, r <= 4 at n = 2 and m, r <= 3 at n = 3 (under 10 min each)", yangian},
      {"Gr W dimensions match the series, n = 1 to degree 12, n = 2 to degree 8", hilbert},
      {"osp(1|2) and sl(1|2) relation tables", presets},
      {"oracle equivalence on 100 seeded random words, length <= 5, n <= 3", oracle_equivalence},
      {"theta has zero kernel on W-monomials of degree <= 8, n = 2, 3", theta_injectivity},
  };
  int failed = 0;
  auto total = Clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1 < 10 ? " " : "") << i + 1 << ". " << criteria[i].first
              << "  [" << Suites::format(since(start)) << "]  " << o.detail << std::endl;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria passed in "
            << Suites::format(since(total)) << std::endl;
  return failed == 0 ? 0 : 1;
}
