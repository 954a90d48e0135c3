// Acceptance gate: runs the verification suites through the installed CLI and
// prints one PASS/FAIL line per release criterion. Exits nonzero when any
// criterion fails. Usage: ultrawave_acceptance <path-to-ultrawave-binary>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::json;

namespace {

struct SuiteRun {
  int exit_code = -1;
  double wall_seconds = 0.0;
  double suite_seconds = 0.0;
  std::map<std::string, bool> checks;
};

SuiteRun run_suite(const std::string& bin, const std::string& suite,
                   const std::string& out) {
  SuiteRun r;
  const std::string cmd =
      bin + " verify --suite " + suite + " --out " + out + " > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int rc = std::system(cmd.c_str());
  const auto t1 = std::chrono::steady_clock::now();
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.wall_seconds = std::chrono::duration<double>(t1 - t0).count();

  std::ifstream is(out);
  if (!is) return r;
  const json j = json::parse(is, nullptr, false);
  if (j.is_discarded() || !j.contains("suites") || j["suites"].empty()) return r;
  const json& s = j["suites"][0];
  r.suite_seconds = s.value("seconds", 0.0);
  for (const json& c : s.at("checks"))
    r.checks[c.at("name").get<std::string>()] = c.at("pass").get<bool>();
  return r;
}

bool passed(const SuiteRun& r, const std::string& name) {
  const auto it = r.checks.find(name);
  return it != r.checks.end() && it->second;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: ultrawave_acceptance <ultrawave-binary>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const std::string tmp = "acceptance_summary";

  // Cheap suites first, separately, for their per-criterion runtime budgets.
  const SuiteRun lemmas = run_suite(bin, "lemmas", tmp + "_lemmas.json");
  const SuiteRun pw = run_suite(bin, "paley-wiener", tmp + "_pw.json");
  const SuiteRun all = run_suite(bin, "all", tmp + "_all.json");

  std::vector<std::pair<std::string, bool>> criteria;
  // 1: associated-function asymptotics match 1/s, within the lemma-suite budget
  criteria.emplace_back("associated-function asymptotics",
                        passed(lemmas, "assoc-asymptotics") && lemmas.suite_seconds < 15.0);
  // 2: sequence conditions and inequality lemmas with zero violations
  criteria.emplace_back("lemma suite (conditions + inequalities)",
                        passed(lemmas, "sequence-conditions") &&
                            passed(lemmas, "assoc-inequalities") &&
                            lemmas.suite_seconds < 15.0);
  // 3: Paley-Wiener decay fits for the bump and the step
  criteria.emplace_back("paley-wiener decay fits",
                        passed(pw, "paley-wiener-bump") && passed(pw, "paley-wiener-step") &&
                            pw.suite_seconds < 2.0);
  // 4: battery classification exactness against analytic ground truth
  criteria.emplace_back("battery classification exactness",
                        passed(all, "invariance/battery-exactness") &&
                            all.suite_seconds < 420.0);
  // 5: FL and MOD classification maps identical on the battery
  criteria.emplace_back("FL/MOD invariance",
                        passed(all, "invariance/fl-mod-agreement") &&
                            all.suite_seconds < 420.0);
  // 6: window and p independence of the classification
  criteria.emplace_back("window and p independence",
                        passed(all, "windows/window-independence") &&
                            passed(all, "windows/p-independence"));
  // 7: N- and q-monotonicity of the singular sets
  criteria.emplace_back("monotonicity",
                        passed(all, "monotonicity/n-monotonicity") &&
                            passed(all, "monotonicity/q-monotonicity"));
  // 8: inf/sup family identities
  criteria.emplace_back("family identities",
                        passed(all, "monotonicity/family-identities"));
  // 9: convolution inclusion, identities, mollification, negative control
  criteria.emplace_back("convolution inclusion",
                        passed(all, "convolution/conv-identities") &&
                            passed(all, "convolution/conv-inclusion") &&
                            passed(all, "convolution/conv-mollify") &&
                            passed(all, "convolution/conv-negative-control"));
  // 10: STFT Parseval / Moyal / inversion round trips
  criteria.emplace_back("stft round trips", passed(all, "invariance/stft-roundtrip"));
  // 11: membership iff empty wave-front set
  criteria.emplace_back("membership iff empty WF",
                        passed(all, "membership/membership-iff"));
  // 12: the full suite finishes cleanly inside ten minutes
  criteria.emplace_back("full verify under budget",
                        all.exit_code == 0 && all.wall_seconds < 600.0);

  bool ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    ok = ok && criteria[k].second;
    std::cout << "criterion " << (k + 1) << ": "
              << (criteria[k].second ? "PASS" : "FAIL") << "  (" << criteria[k].first
              << ")\n";
  }
  std::cout << "acceptance: " << (ok ? "PASS" : "FAIL") << "  (full suite "
            << all.wall_seconds << " s)\n";
  return ok ? 0 : 1;
}
