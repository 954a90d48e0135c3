// End-to-end tests of the command-line tool. The binary path comes in via the
// ULTRAWAVE_BIN compile definition.

#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("uw_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args, const fs::path& log) {
  const std::string cmd =
      std::string(ULTRAWAVE_BIN) + " " + args + " > " + log.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

json load(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

}  // namespace

TEST_CASE("version flag") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  CHECK(run("--version", log) == 0);
  CHECK(slurp(log).find("0.1.0") != std::string::npos);
}

TEST_CASE("synth, analyze, and self-compare round trip") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  const fs::path sig = tmp.path / "step.uwsig";
  CHECK(run("synth --name step --n 1024 --out " + sig.string(), log) == 0);
  CHECK(fs::exists(sig));

  const fs::path rep = tmp.path / "rep.json";
  const fs::path csv = tmp.path / "rep.csv";
  CHECK(run("analyze --in " + sig.string() + " --out " + rep.string() + " --csv " +
                csv.string(),
            log) == 0);
  CHECK(slurp(log).find("singular cells present") != std::string::npos);
  const json j = load(rep);
  CHECK(j.at("kind") == "FL");
  CHECK(j.at("n_fit_failures") == 0);
  CHECK(fs::exists(csv));

  CHECK(run("compare " + rep.string() + " " + rep.string(), log) == 0);
  CHECK(slurp(log).find("agreement 100%") != std::string::npos);
}

TEST_CASE("analyze reports are deterministic modulo the timestamp") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  const fs::path sig = tmp.path / "g.uwsig";
  REQUIRE(run("synth --name gaussian --n 1024 --sigma 0.5 --out " + sig.string(), log) ==
          0);
  const fs::path r1 = tmp.path / "r1.json", r2 = tmp.path / "r2.json";
  const std::string common = "analyze --in " + sig.string() + " --csv " +
                             (tmp.path / "r.csv").string() + " --out ";
  REQUIRE(run(common + r1.string(), log) == 0);
  REQUIRE(run(common + r2.string(), log) == 0);
  json a = load(r1), b = load(r2);
  a.erase("generated_at");
  b.erase("generated_at");
  a.at("config").erase("in");
  b.at("config").erase("in");
  CHECK(a == b);
}

TEST_CASE("invalid configuration exits with code 1") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  const fs::path sig = tmp.path / "d.uwsig";
  REQUIRE(run("synth --name delta --n 256 --out " + sig.string(), log) == 0);

  // r_min >= r_max
  CHECK(run("analyze --in " + sig.string() + " --annulus 4 2 --out " +
                (tmp.path / "r.json").string(),
            log) == 1);
  // r_max beyond nyquist
  CHECK(run("analyze --in " + sig.string() + " --annulus 1 1000 --out " +
                (tmp.path / "r.json").string(),
            log) == 1);
  // unknown estimator
  CHECK(run("analyze --in " + sig.string() + " --estimator quantum --out " +
                (tmp.path / "r.json").string(),
            log) == 1);
  // missing input file
  CHECK(run("analyze --in " + (tmp.path / "absent.uwsig").string(), log) == 1);
  // unknown verify suite is a parse error
  CHECK(run("verify --suite nonsense", log) == 1);
  // unknown battery member
  CHECK(run("synth --name vortex --out " + (tmp.path / "v.uwsig").string(), log) == 1);
}

TEST_CASE("config file supplies defaults and flags override it") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  const fs::path cfg = tmp.path / "cfg.json";
  {
    std::ofstream os(cfg);
    os << R"({"name": "delta", "n": 256})";
  }
  const fs::path s1 = tmp.path / "a.uwsig";
  REQUIRE(run("--config " + cfg.string() + " synth --out " + s1.string(), log) == 0);
  CHECK(slurp(log).find("256 samples") != std::string::npos);
  CHECK(load(tmp.path / "a.uwsig.json").at("name") == "delta");

  const fs::path s2 = tmp.path / "b.uwsig";
  REQUIRE(run("--config " + cfg.string() + " synth --name gaussian --out " + s2.string(),
              log) == 0);
  CHECK(load(tmp.path / "b.uwsig.json").at("name") == "gaussian");

  CHECK(run("--config " + (tmp.path / "missing.json").string() + " synth", log) == 1);
}

TEST_CASE("mod estimator agrees with fl on the step signal") {
  TempDir tmp;
  const fs::path log = tmp.path / "log";
  const fs::path sig = tmp.path / "step.uwsig";
  REQUIRE(run("synth --name step --n 1024 --out " + sig.string(), log) == 0);
  // position stride of a sixth of the window radius: the calibrated lattice on
  // which the FL/MOD invariance is verified (finer strides sample the window
  // rim, where both estimators sit at the classification threshold)
  const std::string stride = " --stride 32";
  const fs::path rf = tmp.path / "fl.json", rm = tmp.path / "mod.json";
  REQUIRE(run("analyze --in " + sig.string() + " --estimator fl" + stride + " --out " +
                  rf.string() + " --csv " + (tmp.path / "fl.csv").string(),
              log) == 0);
  REQUIRE(run("analyze --in " + sig.string() + " --estimator mod" + stride + " --out " +
                  rm.string() + " --csv " + (tmp.path / "mod.csv").string(),
              log) == 0);
  CHECK(run("compare " + rf.string() + " " + rm.string(), log) == 0);
  CHECK(slurp(log).find("agreement 100%") != std::string::npos);
}
