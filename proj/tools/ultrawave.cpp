// ultrawave: battery synthesis, wave-front estimation, and theorem
// verification from the command line. Exit codes: 0 ok, 1 config error,
// 2 degraded (fit failures above 10% of cells), 3 verification failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ultrawave/io.hpp"
#include "ultrawave/propagation.hpp"
#include "ultrawave/threads.hpp"
#include "ultrawave/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

uw::json load_config(const std::string& path) {
  if (path.empty()) return uw::json::object();
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
  uw::json j = uw::json::parse(is, nullptr, false);
  if (j.is_discarded())
    throw CLI::ValidationError("--config", path + " is not valid JSON");
  return j;
}

// Flags override config-file values: config supplies new defaults pre-parse.
template <typename T>
void from_config(const uw::json& cfg, const char* key, T& var) {
  if (cfg.contains(key)) var = cfg.at(key).get<T>();
}

struct SynthArgs {
  std::string name = "gaussian", out = "signal.uwsig", csv;
  int n = 4096, dim = 1;
  double length = 0.0;  // 0: default per dimension
  uw::SynthParams params;
};

int cmd_synth(const SynthArgs& a) {
  const double len = a.length > 0 ? a.length : (a.dim == 1 ? 64.0 : 16.0);
  const uw::GridSpec grid = a.dim == 1 ? uw::GridSpec::regular_1d(a.n, len)
                                       : uw::GridSpec::regular_2d(a.n, len);
  const uw::SampledSignal f = uw::synth(a.name, a.params, grid);
  uw::write_signal(f, a.out);
  if (!a.csv.empty()) uw::write_signal_csv(f, a.csv);
  std::cout << "wrote " << a.out << " (" << f.values.size() << " samples)\n";
  return 0;
}

struct AnalyzeArgs {
  std::string in, out = "report.json", csv = "report.csv";
  std::string estimator = "fl";
  double seq_s = 2.0;
  int seq_pmax = 512;
  double N = 1.0;
  std::vector<double> family;
  double q = 2.0, p = 2.0, tau_star = -0.05;
  std::string window_kind = "gevrey_bump";
  double window_s = 2.0, window_radius = 0.0;
  int stride = 8, n_dir = 0, crop = 0;
  double overlap = 1.5;
  std::vector<double> annulus;
  double gevrey_s = 2.0;
};

uw::json analyze_config_json(const AnalyzeArgs& a) {
  uw::json j;
  j["in"] = a.in;
  j["estimator"] = a.estimator;
  j["seq"] = {{"kind", "gevrey"}, {"s", a.seq_s}, {"p_max", a.seq_pmax}};
  j["N"] = a.N;
  if (!a.family.empty()) j["family"] = a.family;
  j["q"] = a.q;
  j["p"] = a.p;
  j["tau_star"] = a.tau_star;
  j["window"] = {{"kind", a.window_kind}, {"s", a.window_s}, {"radius", a.window_radius}};
  j["stride"] = a.stride;
  j["n_dir"] = a.n_dir;
  j["crop"] = a.crop;
  j["overlap"] = a.overlap;
  j["annulus"] = a.annulus;
  j["gevrey_s"] = a.gevrey_s;
  return j;
}

int cmd_analyze(const AnalyzeArgs& a) {
  const uw::SampledSignal f = uw::read_signal(a.in);
  uw::EstimatorConfig cfg = uw::EstimatorConfig::defaults(f.grid);
  cfg.q = a.q;
  cfg.p = a.p;
  cfg.tau_star = a.tau_star;
  cfg.position_stride = a.stride;
  cfg.overlap = a.overlap;
  if (a.n_dir > 0) cfg.n_dir = a.n_dir;
  if (a.crop > 0) cfg.crop_extent = a.crop;
  if (!a.annulus.empty()) {
    if (a.annulus.size() != 2 || !(a.annulus[0] > 0) || !(a.annulus[0] < a.annulus[1]))
      throw CLI::ValidationError("--annulus", "expected 0 < r_min < r_max");
    const double nyq = f.grid.nyquist(0);
    if (a.annulus[1] > nyq + 1e-12)
      throw CLI::ValidationError("--annulus", "r_max exceeds the Nyquist radius");
    cfg.annulus = {a.annulus[0], a.annulus[1]};
  }
  const double radius = a.window_radius > 0 ? a.window_radius : cfg.window.radius;
  cfg.window = a.window_kind == "gaussian"
                   ? uw::WindowSpec::gaussian(radius)
                   : uw::WindowSpec::gevrey_bump(a.window_s, radius);

  const uw::AssociatedFunction af(uw::gevrey_sequence(a.seq_s, a.seq_pmax));
  std::vector<uw::WaveFrontReport> reports;
  if (a.estimator == "fl" || a.estimator == "mod") {
    cfg.kind = a.estimator == "fl" ? uw::EstimatorKind::FL : uw::EstimatorKind::MOD;
    reports.push_back(uw::wf_estimate(f, af, a.N, cfg));
  } else if (a.estimator == "gevrey") {
    const std::vector<double> fam = a.family.empty() ? std::vector<double>{1.0, 2.0, 4.0}
                                                     : a.family;
    reports.push_back(uw::wf_gevrey_estimate(f, a.gevrey_s, fam, cfg));
  } else if (a.estimator == "family") {
    const std::vector<double> fam = a.family.empty() ? std::vector<double>{1.0, 2.0, 4.0}
                                                     : a.family;
    std::vector<uw::WaveFrontReport> members;
    cfg.kind = uw::EstimatorKind::FL;
    for (double N : fam) members.push_back(uw::wf_estimate(f, af, N, cfg));
    auto [inf_rep, sup_rep] = uw::wf_family(members);
    reports.push_back(std::move(inf_rep));
    reports.push_back(std::move(sup_rep));
  } else {
    throw CLI::ValidationError("--estimator", "unknown estimator '" + a.estimator + "'");
  }

  bool degraded = false;
  for (std::size_t k = 0; k < reports.size(); ++k) {
    uw::json j = uw::report_to_json(reports[k]);
    j["config"] = analyze_config_json(a);
    j["version"] = kVersion;
    j["generated_at"] = timestamp();
    const std::string suffix = reports.size() > 1 ? "." + std::to_string(k) : "";
    uw::atomic_write_text(a.out + suffix, j.dump(2) + "\n");
    uw::write_report_csv(reports[k], a.csv + suffix);
    if (reports[k].n_fit_failures * 10 > static_cast<int>(reports[k].cells.size()))
      degraded = true;
    std::cout << uw::to_string(reports[k].kind) << ": "
              << (reports[k].singular_empty() ? "empty singular set"
                                              : "singular cells present")
              << ", fit failures " << reports[k].n_fit_failures << "/"
              << reports[k].cells.size() << "\n";
  }
  return degraded ? 2 : 0;
}

int cmd_verify(const std::string& suite, const std::string& out) {
  const uw::SuiteResult res = uw::run_suite(suite);
  for (const auto& c : res.checks)
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
              << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
  std::cout << "suite " << res.suite << ": " << (res.pass() ? "PASS" : "FAIL") << " ("
            << res.seconds << " s)\n";
  if (!out.empty()) {
    uw::json j;
    j["suites"] = uw::suites_to_json({res});
    j["version"] = kVersion;
    j["generated_at"] = timestamp();
    uw::atomic_write_text(out, j.dump(2) + "\n");
  }
  return res.pass() ? 0 : 3;
}

int cmd_compare(const std::string& path1, const std::string& path2) {
  std::ifstream is1(path1), is2(path2);
  if (!is1 || !is2) throw CLI::ValidationError("compare", "cannot open report");
  const uw::json r1 = uw::json::parse(is1);
  const uw::json r2 = uw::json::parse(is2);
  if (r1.at("grid") != r2.at("grid") || r1.at("positions") != r2.at("positions") ||
      r1.at("cones").size() != r2.at("cones").size())
    throw CLI::ValidationError("compare", "report grids are incompatible");

  const auto& c1 = r1.at("cells");
  const auto& c2 = r2.at("cells");
  std::size_t agree = 0;
  double max_dtau = 0.0;
  uw::json flipped = uw::json::array();
  for (std::size_t k = 0; k < c1.size(); ++k) {
    const bool s1 = c1[k].at("singular").get<bool>();
    const bool s2 = c2[k].at("singular").get<bool>();
    if (s1 == s2)
      ++agree;
    else
      flipped.push_back({{"cell", k}, {"first", s1}, {"second", s2}});
    max_dtau = std::max(max_dtau, std::abs(c1[k].at("tau").get<double>() -
                                           c2[k].at("tau").get<double>()));
  }
  const double pct = c1.empty() ? 100.0 : 100.0 * agree / c1.size();
  std::cout << "agreement " << pct << "% (" << agree << "/" << c1.size()
            << " cells), max |dtau| = " << max_dtau << ", flipped "
            << flipped.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical microlocal analysis toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values")
      ->expected(1);

  // pre-scan for --config so its values become the defaults
  uw::json file_cfg = uw::json::object();
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--config") {
      try {
        file_cfg = load_config(argv[i + 1]);
      } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
    }

  SynthArgs sa;
  from_config(file_cfg, "name", sa.name);
  from_config(file_cfg, "n", sa.n);
  from_config(file_cfg, "dim", sa.dim);
  from_config(file_cfg, "length", sa.length);
  from_config(file_cfg, "out", sa.out);
  auto* synth = app.add_subcommand("synth", "synthesize a battery signal");
  synth->add_option("--name", sa.name, "battery member name");
  synth->add_option("--n", sa.n, "grid extent per axis (power of two)");
  synth->add_option("--dim", sa.dim, "dimension (1 or 2)")->check(CLI::Range(1, 2));
  synth->add_option("--length", sa.length, "physical domain length");
  synth->add_option("--x0", sa.params.x0, "feature position");
  synth->add_option("--y0", sa.params.y0, "feature position, second axis");
  synth->add_option("--sigma", sa.params.sigma, "gaussian width");
  synth->add_option("--s", sa.params.s, "bump order");
  synth->add_option("--r", sa.params.R, "bump support radius");
  synth->add_option("--c", sa.params.c, "ridge/half-plane jump line");
  synth->add_option("--a", sa.params.a, "chirp rate");
  synth->add_option("--out", sa.out, "output container path");
  synth->add_option("--csv", sa.csv, "also write a CSV projection");

  AnalyzeArgs aa;
  from_config(file_cfg, "in", aa.in);
  from_config(file_cfg, "estimator", aa.estimator);
  from_config(file_cfg, "N", aa.N);
  from_config(file_cfg, "q", aa.q);
  from_config(file_cfg, "p", aa.p);
  from_config(file_cfg, "tau_star", aa.tau_star);
  from_config(file_cfg, "stride", aa.stride);
  from_config(file_cfg, "family", aa.family);
  from_config(file_cfg, "annulus", aa.annulus);
  auto* analyze = app.add_subcommand("analyze", "run a wave-front estimator");
  analyze->add_option("--in", aa.in, "input signal container")->required();
  analyze->add_option("--estimator", aa.estimator, "fl | mod | gevrey | family");
  analyze->add_option("--seq-s", aa.seq_s, "Gevrey order of the defining sequence");
  analyze->add_option("--seq-pmax", aa.seq_pmax, "sequence truncation");
  analyze->add_option("--weight-n", aa.N, "weight exponent N in e^{N M}");
  analyze->add_option("--family", aa.family, "N family for gevrey/family estimators");
  analyze->add_option("--q", aa.q, "outer Lebesgue exponent");
  analyze->add_option("--p", aa.p, "MOD aggregation exponent");
  analyze->add_option("--tau-star", aa.tau_star, "classification threshold (< 0)");
  analyze->add_option("--window", aa.window_kind, "gevrey_bump | gaussian");
  analyze->add_option("--window-s", aa.window_s, "cutoff bump order");
  analyze->add_option("--window-radius", aa.window_radius, "cutoff radius (physical)");
  analyze->add_option("--stride", aa.stride, "position grid stride in samples");
  analyze->add_option("--n-dir", aa.n_dir, "direction cover size");
  analyze->add_option("--overlap", aa.overlap, "cone overlap factor");
  analyze->add_option("--annulus", aa.annulus, "r_min r_max")->expected(2);
  analyze->add_option("--crop", aa.crop, "MOD crop FFT extent");
  analyze->add_option("--gevrey-s", aa.gevrey_s, "Gevrey estimator order");
  analyze->add_option("--out", aa.out, "report JSON path");
  analyze->add_option("--csv", aa.csv, "report CSV path");

  std::string suite = "all", verify_out;
  from_config(file_cfg, "suite", suite);
  auto* verify = app.add_subcommand("verify", "run a theorem-verification suite");
  verify->add_option("--suite", suite, "suite tag")
      ->check(CLI::IsMember(uw::verify_suites()));
  verify->add_option("--out", verify_out, "summary JSON path");

  std::string cmp1, cmp2;
  auto* compare = app.add_subcommand("compare", "diff two wave-front reports");
  compare->add_option("first", cmp1, "first report JSON")->required();
  compare->add_option("second", cmp2, "second report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (synth->parsed()) return cmd_synth(sa);
    if (analyze->parsed()) return cmd_analyze(aa);
    if (verify->parsed()) return cmd_verify(suite, verify_out);
    if (compare->parsed()) return cmd_compare(cmp1, cmp2);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
