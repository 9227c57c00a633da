#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "suptail/bounds.hpp"

using namespace suptail;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path test_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("suptail_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CmdResult run_cli(const std::string& args) {
  const fs::path out = test_dir() / "stdout.txt";
  const fs::path err = test_dir() / "stderr.txt";
  const std::string cmd = std::string(SUPTAIL_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

}  // namespace

TEST_CASE("bounds: single cell emits a header and one row") {
  const CmdResult r = run_cli("bounds --n 1000 --sigma2 0.01");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] ==
        "n,sigma2,regime,u,u_bar,hat_u,two_sqrtn_sigma2,bound_at_u,bennett_at_u");
  const auto f = fields(ls[1]);
  REQUIRE(f.size() == 9);
  CHECK(f[0] == "1000");
  CHECK(f[2] == "C");
}

TEST_CASE("bounds: regime column and threshold dominance across a grid") {
  const CmdResult r = run_cli("bounds --n 10:100000:8 --sigma2 1e-8:0.9:10");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() > 10);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() == 9);
    const auto n = static_cast<std::uint64_t>(std::stoull(f[0]));
    const double sigma2 = std::stod(f[1]);
    CHECK(f[2] == regime_name(classify_regime(n, sigma2)));
    if (f[2] != "A") {
      CHECK(std::stod(f[3]) >= std::stod(f[6]));  // u >= 2 sqrt(n) sigma2
    }
  }
}

TEST_CASE("bounds: bad grid is a usage error") {
  CHECK(run_cli("bounds --n 1000 --sigma2 nope").exit_code == 2);
  CHECK(run_cli("bounds --n 1000 --sigma2 0.5:0.1:5").exit_code == 2);
  CHECK(run_cli("bounds --n 0,5 --sigma2 0.5").exit_code == 2);
  CHECK(run_cli("bounds --n 1000 --sigma2 0.5 --constants Q=1").exit_code == 2);
}

TEST_CASE("simulate: deterministic output and resolved rules in the manifest") {
  const fs::path config = test_dir() / "sim.json";
  {
    std::ofstream out(config);
    out << R"({"n": 50, "sigma2": 0.25, "levels": [0.1, "u"], "reps": 50,
               "seed": 3, "L": 1, "D": 1})";
  }
  const fs::path csv1 = test_dir() / "sim1.csv";
  const fs::path csv2 = test_dir() / "sim2.csv";
  const CmdResult r1 =
      run_cli("simulate --config " + config.string() + " --out " + csv1.string());
  const CmdResult r2 =
      run_cli("simulate --config " + config.string() + " --out " + csv2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const std::string body1 = slurp(csv1);
  CHECK(body1 == slurp(csv2));
  const auto ls = lines(body1);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0] ==
        "v,hits,reps,p_hat,ci_low,ci_high,bound_thm1,bound_ext,bound_bennett,"
        "applicable_thm1,applicable_ext,dominance");

  // resolved "u" recorded in the manifest equals the threshold
  const std::string manifest = slurp(fs::path(csv1.string() + ".manifest.json"));
  BoundParams params;
  const double u = threshold_u(50, 0.25, 1.0, 1.0, params);
  std::ostringstream expect;
  expect << u;
  CHECK(manifest.find("levels_resolved") != std::string::npos);
  CHECK(manifest.find(expect.str().substr(0, 10)) != std::string::npos);
}

TEST_CASE("simulate: parse errors carry line and column, exit 2") {
  const fs::path config = test_dir() / "broken.json";
  {
    std::ofstream out(config);
    out << "{\n  \"n\": 50,\n  oops\n}";
  }
  const CmdResult r = run_cli("simulate --config " + config.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(r.err.find("column") != std::string::npos);
}

TEST_CASE("simulate: unknown config keys are rejected") {
  const fs::path config = test_dir() / "extra.json";
  {
    std::ofstream out(config);
    out << R"({"n": 10, "sigma2": 0.5, "levels": [0.5], "reps": 5, "sigma": 1})";
  }
  CHECK(run_cli("simulate --config " + config.string()).exit_code == 2);
}

TEST_CASE("simulate: missing config file exits 2") {
  CHECK(run_cli("simulate --config /does/not/exist.json").exit_code == 2);
}

TEST_CASE("lower-bound: out-of-range sigma2 skips the poisson rows") {
  const CmdResult r =
      run_cli("lower-bound --n 50 --sigma2 0.5 --reps 200 --seed 2");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "kind,level,estimate,ci_low,ci_high,status,reason");
  CHECK(fields(ls[1])[0] == "empirical_at_u_hat");
  CHECK(fields(ls[1])[5] == "ok");
  for (std::size_t i = 2; i < 5; ++i) {
    const auto f = fields(ls[i]);
    CHECK(f[5] == "skipped");
    CHECK(!f[6].empty());
  }
}

TEST_CASE("lower-bound: effectively-zero sigma2 estimates one") {
  const CmdResult r =
      run_cli("lower-bound --n 100 --sigma2 1e-300 --reps 300 --seed 2");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  const auto f = fields(ls[1]);
  CHECK(f[0] == "empirical_at_u_hat");
  CHECK(std::stod(f[2]) == 1.0);
}

TEST_CASE("lower-bound: in-range sigma2 emits analytic and condition rows") {
  const CmdResult r = run_cli(
      "lower-bound --n 3000 --sigma2 0.0002 --reps 200 --seed 4 --threads 2");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(fields(ls[2])[0] == "poisson_at_mstar");
  CHECK(fields(ls[2])[5] == "ok");
  CHECK(fields(ls[3])[0] == "analytic_lower_bound");
  const auto condition = fields(ls[4]);
  CHECK(condition[0] == "condition_margin");
  CHECK((condition[5] == "holds" || condition[5] == "fails"));
}

TEST_CASE("modulus: one row per grid cell") {
  const CmdResult r =
      run_cli("modulus --n 50,200 --delta 0.05,1 --reps 40 --seed 6");
  CHECK(r.exit_code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 5);
  CHECK(ls[0] == "n,delta,reps,mean,q50,q90,q99,max,u_hat,ratio_mean");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() == 10);
    const double ratio = std::stod(f[9]);
    CHECK(ratio > 0.0);
    CHECK(std::isfinite(ratio));
    CHECK(std::stod(f[4]) <= std::stod(f[6]));  // q50 <= q99
    CHECK(std::stod(f[6]) <= std::stod(f[7]));  // q99 <= max
  }
}

TEST_CASE("verify: passes with defaults, fails fast on corrupt constants") {
  const CmdResult ok = run_cli("verify --seed 11 --threads 4");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);

  const CmdResult bad = run_cli("verify --seed 11 --threads 4 --constants C2=1.5");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("bounds.params_valid") != std::string::npos);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("C2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("lower-bound --sigma2 0.5").exit_code == 2);  // missing --n
}
