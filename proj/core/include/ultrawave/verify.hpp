#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace uw {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool pass() const;
  const CheckResult* find(const std::string& name) const;
};

// lemmas, paley-wiener, invariance, windows, monotonicity, convolution,
// membership — plus "all".
const std::vector<std::string>& verify_suites();

SuiteResult run_suite(const std::string& suite);
std::vector<SuiteResult> run_all_suites();

nlohmann::json suites_to_json(const std::vector<SuiteResult>& suites);

}  // namespace uw
