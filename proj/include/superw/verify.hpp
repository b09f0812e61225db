#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "superw/pbw.hpp"

namespace superw {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  /// Short note on success; the counterexample on failure.
  std::string detail;
};

struct SuiteParams {
  int n = 2;
  std::optional<int> max_level = std::nullopt;
  std::optional<int> max_degree = std::nullopt;
  std::uint64_t seed = 1;
  int samples = 100;
  /// Compute every bracket in U(g)/I_χ, never through the Harish-Chandra image.
  bool exhaustive = false;
};

struct Report {
  std::string suite;
  std::string anchor;
  SuiteParams params;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  std::size_t count(Status s) const;
};

struct SuiteInfo {
  std::string name;
  /// The identity under test, in formula form.
  std::string anchor;
  int min_n;
  int max_n;
  /// True for suites on the fixed presets; n is ignored.
  bool fixed_algebra;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(const std::string& name);

/// Runs one suite. Out-of-range n gives a report whose single check is skipped;
/// an unknown suite throws superw::Error listing the valid names.
Report run_suite(const std::string& name, const SuiteParams& params);

using Product = std::function<Element(const Element&, const Element&)>;

/// Σ_σ sgn(σ) u_σ(1)···u_σ(N) with ordinary signs; throws on an empty list.
/// `mul` defaults to the product of U(g).
Element standard_polynomial(const std::vector<Element>& elems, const Product& mul = {});

/// Generator-monomial dimension count against Π_k (1+t^{2k+2})/(1−t^{2k+2}).
Report hilbert_check(int n, int max_degree);

/// Coefficients of Π_{k<n} (1+t^{2k+2})/(1−t^{2k+2}) up to t^max_degree.
std::vector<long long> hilbert_series(int n, int max_degree);

}  // namespace superw
