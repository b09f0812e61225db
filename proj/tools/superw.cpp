// Command-line front end: algebra info, expression evaluation and the verification suites.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "superw/cartan.hpp"
#include "superw/expression.hpp"
#include "superw/verify.hpp"

namespace {

using namespace superw;

struct Options {
  int n = 2;
  std::string preset = "q";
  std::optional<int> max_level;
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
  std::string format = "text";
  int samples = 100;
  bool exhaustive = false;
};

SuiteParams params_of(const Options& o) {
  SuiteParams p;
  p.n = o.n;
  p.max_level = o.max_level;
  p.max_degree = o.max_degree;
  p.seed = o.seed;
  p.samples = o.samples;
  p.exhaustive = o.exhaustive;
  return p;
}

WhittakerPtr algebra_of(const Options& o) {
  if (o.preset == "q") return WhittakerData::queer(o.n);
  return WhittakerData::for_preset(o.preset, std::nullopt);
}

// One JSON object per line with keys suite, check, status, anchor, detail.
void emit_structured(const Report& r) {
  for (const auto& c : r.checks) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["check"] = c.name;
    j["status"] = status_name(c.status);
    j["anchor"] = r.anchor;
    j["detail"] = c.detail;
    std::cout << j.dump() << '\n';
  }
}

void emit_text(const Report& r) {
  std::cout << r.suite << ": " << r.anchor << '\n';
  for (const auto& c : r.checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    std::cout << "  " << tag << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
  }
  std::cout << "  " << r.count(Status::Pass) << " passed, " << r.count(Status::Fail) << " failed, "
            << r.count(Status::Skipped) << " skipped\n";
}

int verify(const Options& o, const std::string& which) {
  std::vector<std::string> names;
  if (which == "all") {
    for (const auto& s : suite_registry()) names.push_back(s.name);
  } else {
    names.push_back(which);
  }
  bool ok = true;
  for (const auto& name : names) {
    Report r = run_suite(name, params_of(o));
    ok = ok && r.passed();
    if (o.format == "structured") emit_structured(r);
    else emit_text(r);
    std::cout.flush();
  }
  return ok ? 0 : 1;
}

int algebra_info(const Options& o) {
  auto w = algebra_of(o);
  const AlgebraSpec& g = w->algebra();
  std::cout << "algebra: " << (g.is_queer() ? "q(" + std::to_string(g.n()) + ")" : g.name()) << '\n';
  int odd = 0;
  for (const auto& x : g.generators()) odd += bit(x.parity);
  std::cout << "dimension: (" << g.size() - odd << "|" << odd << ")\n";
  std::cout << "generators (name, parity, Dynkin degree, weight, Kazhdan degree):\n";
  for (int i = 0; i < g.size(); ++i) {
    const Generator& x = g.generator(i);
    Grading gr = grading(g, x.id);
    std::cout << "  " << x.name << "  " << (x.parity == Parity::Odd ? "odd" : "even") << "  " << gr.dynkin << "  "
              << gr.weight << "  " << gr.kazhdan << '\n';
  }
  std::cout << "m:";
  for (const auto& mg : w->m()) std::cout << ' ' << g.generator(mg.generator).name;
  std::cout << "\nchi:";
  for (const auto& mg : w->m())
    if (!mg.chi.is_zero()) std::cout << ' ' << g.generator(mg.generator).name << " -> " << mg.chi;
  std::cout << '\n';
  return 0;
}

int compute(const Options& o, const std::string& src) {
  auto w = algebra_of(o);
  ExprPtr e = parse_expression(src, o.preset == "q" ? o.n : 0);
  Evaluator ev(w);
  std::cout << ev.evaluate(*e).str() << '\n';
  return 0;
}

int charpoly(const Options& o) {
  if (o.n < 1 || o.n > kMaxVariables - 1) throw Error("charpoly supports 1 <= n <= " + std::to_string(kMaxVariables - 1));
  auto names = x_names(o.n);
  names.push_back("lambda");
  Polynomial got = char_poly(t_matrix(o.n));
  std::cout << "det(lambda - T) = " << got.str(names) << '\n';
  bool ok = got == expected_char_poly(o.n);
  std::cout << (ok ? "matches" : "differs from") << " lambda^n + sigma_2 lambda^(n-2) + sigma_4 lambda^(n-4) + ...\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in finite W-algebras of q(n)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--n", o.n, "rank of q(n)")->capture_default_str()->check(CLI::Range(1, 7));
  app.add_option("--preset", o.preset, "algebra preset")->capture_default_str()->check(CLI::IsMember({"q", "osp12", "sl12"}));
  app.add_option("--max-level", o.max_level, "Sergeev level cap for the suites that use one");
  app.add_option("--max-degree", o.max_degree, "Kazhdan degree cap (even)");
  app.add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", o.format, "output format")->capture_default_str()->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--samples", o.samples, "samples for randomized checks")->capture_default_str();
  app.add_flag("--exhaustive", o.exhaustive, "compute every bracket directly (slow for n = 4)");

  auto* algebra = app.add_subcommand("algebra", "algebra data");
  algebra->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "generators, gradings, m and chi");

  std::string expr;
  auto* comp = app.add_subcommand("compute", "evaluate an expression");
  comp->add_option("expr", expr, "expression, e.g. theta(pi(sergeev_e(2,1,3)))")->required();

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> choices{"all"};
  for (const auto& s : superw::suite_registry()) choices.push_back(s.name);
  ver->add_option("suite", suite, "suite name or 'all'")->required()->check(CLI::IsMember(choices));

  auto* cp = app.add_subcommand("charpoly", "det(lambda - T) for the matrix of ad(omega)");
  auto* yan = app.add_subcommand("yangian", "check the Yangian relations under phi");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*info) return algebra_info(o);
    if (*comp) return compute(o, expr);
    if (*ver) return verify(o, suite);
    if (*cp) return charpoly(o);
    if (*yan) return verify(o, "yangian");
  } catch (const superw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
