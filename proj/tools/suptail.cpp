// suptail: tail bounds and Monte Carlo experiments for suprema of
// normalized partial sums over grid indicator classes.
//
// Subcommands:
//   bounds       tabulate thresholds and closed-form bounds over a grid
//   simulate     replicated tail estimation from a JSON config
//   lower-bound  empirical + Poisson lower-bound experiment at u_hat
//   modulus      modulus-of-continuity statistics of G_n
//   verify       run the full invariant suite
//
// Exit codes: 0 success, 1 runtime/assertion failure, 2 usage/config error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suptail/bounds.hpp"
#include "suptail/csv.hpp"
#include "suptail/empirical.hpp"
#include "suptail/montecarlo.hpp"
#include "suptail/poisson.hpp"
#include "suptail/rng.hpp"
#include "suptail/verify.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using nlohmann::json;
using namespace suptail;

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// "C2=0.25,K=0.5" -> overrides on top of params
void apply_constants(BoundParams& params, const std::string& spec) {
  if (spec.empty()) return;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw usage_error("--constants entries must look like NAME=VALUE: " + item);
    }
    const std::string name = item.substr(0, eq);
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw usage_error("--constants value is not a number: " + item);
    }
    if (name == "C1") params.C1 = value;
    else if (name == "C2") params.C2 = value;
    else if (name == "C3") params.C3 = value;
    else if (name == "C4") params.C4 = value;
    else if (name == "C5") params.C5 = value;
    else if (name == "C6") params.C6 = value;
    else if (name == "K") params.K = value;
    else if (name == "alpha") params.alpha = value;
    else if (name == "C") params.C = value;
    else if (name == "alpha_bar") params.alpha_bar = value;
    else if (name == "A0") params.A0 = value;
    else if (name == "Cbar") params.Cbar = value;
    else throw usage_error("unknown constant '" + name + "'");
  }
}

json params_to_json(const BoundParams& p) {
  return json{{"C1", p.C1},       {"C2", p.C2},     {"C3", p.C3},
              {"C4", p.C4},       {"C5", p.C5},     {"C6", p.C6},
              {"K", p.K},         {"alpha", p.alpha}, {"C", p.C},
              {"alpha_bar", p.alpha_bar}, {"A0", p.A0}, {"Cbar", p.Cbar}};
}

// Grid item: a plain number, or lo:hi:count for a log-spaced range.
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto c1 = item.find(':');
    if (c1 == std::string::npos) {
      try {
        grid.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw usage_error("bad grid value: " + item);
      }
      continue;
    }
    const auto c2 = item.find(':', c1 + 1);
    if (c2 == std::string::npos) throw usage_error("bad grid range: " + item);
    double lo = 0.0, hi = 0.0;
    long count = 0;
    try {
      lo = std::stod(item.substr(0, c1));
      hi = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
      count = std::stol(item.substr(c2 + 1));
    } catch (const std::exception&) {
      throw usage_error("bad grid range: " + item);
    }
    if (!(lo > 0.0) || !(hi > lo) || count < 2) {
      throw usage_error("grid range needs 0 < lo < hi and count >= 2: " + item);
    }
    for (long i = 0; i < count; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(count - 1);
      grid.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    }
  }
  if (grid.empty()) throw usage_error("empty grid: " + spec);
  return grid;
}

std::vector<std::uint64_t> parse_n_grid(const std::string& spec) {
  std::vector<std::uint64_t> ns;
  for (double v : parse_grid(spec)) {
    const auto n = static_cast<std::uint64_t>(std::llround(v));
    if (n < 2) throw usage_error("n grid values must be >= 2");
    if (ns.empty() || ns.back() != n) ns.push_back(n);
  }
  return ns;
}

// Writes the result to --out (or stdout) and the manifest alongside it (or
// to stderr when writing to stdout, keeping stdout byte-stable).
void emit(const std::string& out_path, const std::string& body, json manifest) {
  manifest["tool_version"] = kToolVersion;
  manifest["finished_at"] = iso_timestamp();
  if (out_path.empty()) {
    std::cout << body;
    std::cerr << manifest.dump(2) << "\n";
    return;
  }
  {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << body;
  }
  std::ofstream mout(out_path + ".manifest.json", std::ios::binary);
  if (!mout) throw std::runtime_error("cannot write manifest for " + out_path);
  mout << manifest.dump(2) << "\n";
}

// --- bounds ----------------------------------------------------------------

int cmd_bounds(const std::string& n_spec, const std::string& sigma2_spec, double L,
               double D, const std::string& constants, const std::string& out_path) {
  BoundParams params;
  apply_constants(params, constants);
  params.validate();
  const auto ns = parse_n_grid(n_spec);
  const auto sigma2s = parse_grid(sigma2_spec);

  json manifest;
  manifest["command"] = "bounds";
  manifest["started_at"] = iso_timestamp();
  manifest["config"] = {{"n_grid", ns},
                        {"sigma2_grid", sigma2s},
                        {"L", L},
                        {"D", D},
                        {"constants", params_to_json(params)}};

  std::ostringstream csv;
  csv << "n,sigma2,regime,u,u_bar,hat_u,two_sqrtn_sigma2,bound_at_u,bennett_at_u\n";
  for (const std::uint64_t n : ns) {
    for (const double sigma2 : sigma2s) {
      const Regime regime = classify_regime(n, sigma2);
      const double u = threshold_u(n, sigma2, L, D, params);
      const double u_bar = threshold_u_bar(sigma2, L, D, params);
      const double hat_u = lower_bound_level(n, sigma2, params);
      const double two_gate = 2.0 * std::sqrt(static_cast<double>(n)) * sigma2;
      std::string bound_at_u;
      try {
        bound_at_u =
            format_double(std::min(1.0, sup_tail_bound(n, sigma2, u, L, D, params)));
      } catch (const bound_not_applicable&) {
        // u itself can sit below sqrt(n) sigma2 for exotic constants
      }
      const double bennett_at_u = bennett_bound(n, sigma2, u);
      csv << format_u64(n) << ',' << format_double(sigma2) << ','
          << regime_name(regime) << ',' << format_double(u) << ','
          << format_double(u_bar) << ',' << format_double(hat_u) << ','
          << format_double(two_gate) << ',' << bound_at_u << ','
          << format_double(bennett_at_u) << '\n';
    }
  }
  emit(out_path, csv.str(), std::move(manifest));
  return 0;
}

// --- simulate ----------------------------------------------------------------

struct LineCol {
  std::size_t line = 1;
  std::size_t col = 1;
};

LineCol line_col(const std::string& text, std::size_t byte) {
  LineCol lc;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.col = 1;
    } else {
      ++lc.col;
    }
  }
  return lc;
}

ExperimentConfig parse_simulate_config(const std::string& path,
                                       const std::string& constants_flag,
                                       std::optional<std::uint64_t> seed_flag,
                                       std::optional<std::uint64_t> reps_flag,
                                       std::optional<unsigned> threads_flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  json config;
  try {
    config = json::parse(text);
  } catch (const json::parse_error& e) {
    const LineCol lc = line_col(text, e.byte);
    throw usage_error("config parse error at line " + std::to_string(lc.line) +
                      ", column " + std::to_string(lc.col) + ": " + e.what());
  }

  static const char* known[] = {"n",    "sigma2",    "levels", "reps",
                                "seed", "constants", "L",      "D",
                                "threads"};
  for (const auto& [key, value] : config.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw usage_error("config: unknown key '" + key + "'");
  }

  ExperimentConfig out;
  try {
    out.n = config.at("n").get<std::uint64_t>();
    out.sigma2 = config.at("sigma2").get<double>();
    out.reps = config.at("reps").get<std::uint64_t>();
    out.master_seed = config.value("seed", std::uint64_t{0});
    out.L = config.value("L", 1.0);
    out.D = config.value("D", 1.0);
    out.threads = config.value("threads", 1u);
    if (config.contains("constants")) {
      const json& c = config.at("constants");
      if (!c.is_object()) throw usage_error("config: constants must be an object");
      std::ostringstream flat;
      bool first = true;
      for (const auto& [key, value] : c.items()) {
        if (!first) flat << ',';
        first = false;
        flat << key << '=' << value.get<double>();
      }
      apply_constants(out.params, flat.str());
    }
    if (!config.contains("levels") || !config.at("levels").is_array() ||
        config.at("levels").empty()) {
      throw usage_error("config: levels must be a nonempty array");
    }
    for (const json& level : config.at("levels")) {
      if (level.is_string()) {
        out.levels.push_back({level.get<std::string>(), 0.0});
      } else if (level.is_number()) {
        out.levels.push_back({"", level.get<double>()});
      } else {
        throw usage_error("config: levels must be numbers or rule names");
      }
    }
  } catch (const json::exception& e) {
    throw usage_error(std::string("config: ") + e.what());
  }
  apply_constants(out.params, constants_flag);  // flag wins over config
  if (seed_flag) out.master_seed = *seed_flag;
  if (reps_flag) out.reps = *reps_flag;
  if (threads_flag) out.threads = *threads_flag;
  out.params.validate();
  return out;
}

int cmd_simulate(const ExperimentConfig& config, const std::string& out_path) {
  const std::vector<LevelSpec> resolved = resolve_levels(config);

  json manifest;
  manifest["command"] = "simulate";
  manifest["started_at"] = iso_timestamp();
  json levels_json = json::array();
  json resolved_json = json::array();
  for (const LevelSpec& level : config.levels) {
    if (level.rule.empty()) levels_json.push_back(level.value);
    else levels_json.push_back(level.rule);
  }
  for (const LevelSpec& level : resolved) resolved_json.push_back(level.value);
  manifest["config"] = {{"n", config.n},
                        {"sigma2", config.sigma2},
                        {"levels", levels_json},
                        {"levels_resolved", resolved_json},
                        {"reps", config.reps},
                        {"seed", config.master_seed},
                        {"L", config.L},
                        {"D", config.D},
                        {"threads", config.threads},
                        {"constants", params_to_json(config.params)}};

  const std::vector<TailEstimate> estimates = estimate_tail(config);
  const std::vector<ComparisonRow> rows = compare_with_bounds(
      estimates, config.n, config.sigma2, config.L, config.D, config.params);

  std::ostringstream csv;
  csv << "v,hits,reps,p_hat,ci_low,ci_high,bound_thm1,bound_ext,bound_bennett,"
         "applicable_thm1,applicable_ext,dominance\n";
  for (const ComparisonRow& row : rows) {
    const TailEstimate& e = row.estimate;
    csv << format_double(e.v) << ',' << format_u64(e.hits) << ','
        << format_u64(e.reps) << ',' << format_double(e.p_hat) << ','
        << format_double(e.ci_low) << ',' << format_double(e.ci_high) << ','
        << (row.bound_main ? format_double(*row.bound_main) : std::string()) << ','
        << (row.bound_gaussian ? format_double(*row.bound_gaussian) : std::string())
        << ',' << format_double(row.bound_bennett) << ','
        << (row.bound_main ? "true" : "false") << ','
        << (row.bound_gaussian ? "true" : "false") << ',' << row.dominance << '\n';
  }
  emit(out_path, csv.str(), std::move(manifest));
  return 0;
}

// --- lower-bound -------------------------------------------------------------

int cmd_lower_bound(std::uint64_t n, double sigma2, std::uint64_t reps,
                    std::uint64_t seed, double delta, unsigned threads,
                    const std::string& constants, const std::string& out_path) {
  BoundParams params;
  apply_constants(params, constants);
  params.validate();

  json manifest;
  manifest["command"] = "lower-bound";
  manifest["started_at"] = iso_timestamp();
  manifest["config"] = {{"n", n},       {"sigma2", sigma2}, {"reps", reps},
                        {"seed", seed}, {"delta", delta},   {"threads", threads},
                        {"constants", params_to_json(params)}};

  std::ostringstream csv;
  csv << "kind,level,estimate,ci_low,ci_high,status,reason\n";

  const TailEstimate empirical =
      lower_bound_experiment(n, sigma2, reps, seed, params, threads);
  csv << "empirical_at_u_hat," << format_double(empirical.v) << ','
      << format_double(empirical.p_hat) << ',' << format_double(empirical.ci_low)
      << ',' << format_double(empirical.ci_high) << ",ok,\n";

  const double poisson_cap =
      std::log(static_cast<double>(n)) / (7.0 * static_cast<double>(n));
  const double case_b_edge =
      std::log(static_cast<double>(n)) / (8.0 * static_cast<double>(n));
  if (sigma2 > poisson_cap) {
    const std::string reason = "sigma2 above log(n)/(7n); construction undefined";
    csv << "poisson_at_mstar,,,,,skipped," << reason << '\n';
    csv << "analytic_lower_bound,,,,,skipped," << reason << '\n';
    csv << "condition_margin,,,,,skipped," << reason << '\n';
  } else {
    // The construction range log(n)/(7n) pokes above the case-b band edge
    // log(n)/(8n); annotate rows that fall in between.
    const std::string note = (sigma2 > case_b_edge)
                                 ? "above the case-b edge log(n)/(8n)"
                                 : std::string();
    const std::uint64_t target = poisson_target_count(n, sigma2);
    const TailEstimate poisson =
        poisson_tail_experiment(n, sigma2, reps, seed, threads);
    csv << "poisson_at_mstar," << format_u64(target) << ','
        << format_double(poisson.p_hat) << ',' << format_double(poisson.ci_low)
        << ',' << format_double(poisson.ci_high) << ",ok," << note << '\n';
    const double analytic = analytic_lower_bound(n, sigma2);
    csv << "analytic_lower_bound," << format_u64(target) << ','
        << format_double(analytic) << ",,,ok," << note << '\n';
    const ConditionCheck check = check_poisson_condition(n, sigma2, delta);
    csv << "condition_margin," << format_u64(target) << ','
        << format_double(check.log_margin) << ",,,"
        << (check.holds ? "holds," : "fails,") << note << '\n';
  }
  emit(out_path, csv.str(), std::move(manifest));
  return 0;
}

// --- modulus -------------------------------------------------------------------

int cmd_modulus(const std::string& n_spec, const std::string& delta_spec,
                std::uint64_t reps, std::uint64_t seed, const std::string& constants,
                const std::string& out_path) {
  BoundParams params;
  apply_constants(params, constants);
  params.validate();
  const auto ns = parse_n_grid(n_spec);
  const auto deltas = parse_grid(delta_spec);
  for (double d : deltas) {
    if (!(d > 0.0) || !(d <= 1.0)) throw usage_error("deltas must lie in (0, 1]");
  }
  if (reps < 1) throw usage_error("reps must be >= 1");

  json manifest;
  manifest["command"] = "modulus";
  manifest["started_at"] = iso_timestamp();
  manifest["config"] = {{"n_grid", ns},
                        {"delta_grid", deltas},
                        {"reps", reps},
                        {"seed", seed},
                        {"constants", params_to_json(params)}};

  std::ostringstream csv;
  csv << "n,delta,reps,mean,q50,q90,q99,max,u_hat,ratio_mean\n";
  for (const std::uint64_t n : ns) {
    for (const double delta : deltas) {
      std::vector<double> values(reps);
      for (std::uint64_t rep = 0; rep < reps; ++rep) {
        const SamplePath path =
            sample_uniform(n, derive_key(seed, Stream::modulus, rep));
        values[rep] = modulus_statistic(path, delta);
      }
      std::sort(values.begin(), values.end());
      double mean = 0.0;
      for (double value : values) mean += value;
      mean /= static_cast<double>(reps);
      auto quantile = [&values](double q) {  // nearest-rank
        const std::size_t rank = static_cast<std::size_t>(
            std::ceil(q * static_cast<double>(values.size())));
        return values[rank == 0 ? 0 : rank - 1];
      };
      // candidate normalizer at sigma2 = delta
      const double sigma = std::sqrt(delta);
      const double u_hat = params.Cbar * sigma * std::sqrt(std::log(2.0 / sigma));
      csv << format_u64(n) << ',' << format_double(delta) << ',' << format_u64(reps)
          << ',' << format_double(mean) << ',' << format_double(quantile(0.5)) << ','
          << format_double(quantile(0.9)) << ',' << format_double(quantile(0.99))
          << ',' << format_double(values.back()) << ',' << format_double(u_hat)
          << ',' << format_double(mean / u_hat) << '\n';
    }
  }
  emit(out_path, csv.str(), std::move(manifest));
  return 0;
}

// --- verify ---------------------------------------------------------------------

int cmd_verify(std::uint64_t seed, unsigned threads, const std::string& constants) {
  BoundParams params;
  apply_constants(params, constants);

  bool params_ok = true;
  std::string params_msg = "all fields positive, C2 < 1";
  try {
    params.validate();
  } catch (const std::exception& e) {
    params_ok = false;
    params_msg = e.what();
  }

  std::vector<CheckResult> results;
  if (params_ok) {
    results = run_verify_suite(seed, params, threads);
  } else {
    // Invalid constants: report the params check and stop there.
    results.push_back({"bounds.params_valid", false, params_msg, 0.0});
  }

  bool all_pass = true;
  std::printf("%-38s %-6s %10s  %s\n", "check", "result", "seconds", "detail");
  for (const CheckResult& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("%-38s %-6s %10.3f  %s\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
  }
  std::printf("verify: %s\n", all_pass ? "all checks passed" : "FAILURES present");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tail bounds and simulations for suprema of normalized partial sums"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "tabulate thresholds and bounds");
  std::string bounds_n = "10,100,1000";
  std::string bounds_sigma2 = "0.5";
  double bounds_l = 1.0, bounds_d = 1.0;
  std::string bounds_constants, bounds_out;
  bounds_cmd->add_option("--n", bounds_n, "n grid (list or lo:hi:count, log-spaced)");
  bounds_cmd->add_option("--sigma2", bounds_sigma2, "sigma2 grid");
  bounds_cmd->add_option("--L", bounds_l, "covering exponent L >= 1");
  bounds_cmd->add_option("--D", bounds_d, "covering parameter D >= 1");
  bounds_cmd->add_option("--constants", bounds_constants, "overrides, k=v,...");
  bounds_cmd->add_option("--out", bounds_out, "output CSV path (default stdout)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "tail estimation from a config");
  std::string sim_config, sim_constants, sim_out;
  std::optional<std::uint64_t> sim_seed, sim_reps;
  std::optional<unsigned> sim_threads;
  sim_cmd->add_option("--config", sim_config, "JSON config path")->required();
  sim_cmd->add_option("--seed", sim_seed, "override config seed");
  sim_cmd->add_option("--reps", sim_reps, "override config reps");
  sim_cmd->add_option("--threads", sim_threads, "override config threads");
  sim_cmd->add_option("--constants", sim_constants, "overrides, k=v,...");
  sim_cmd->add_option("--out", sim_out, "output CSV path (default stdout)");

  // lower-bound
  auto* lb_cmd = app.add_subcommand("lower-bound", "lower-bound experiments");
  std::uint64_t lb_n = 1000;
  double lb_sigma2 = 0.001;
  std::uint64_t lb_reps = 1000, lb_seed = 1;
  double lb_delta = 0.1;
  unsigned lb_threads = 1;
  std::string lb_constants, lb_out;
  lb_cmd->add_option("--n", lb_n, "sample size")->required();
  lb_cmd->add_option("--sigma2", lb_sigma2, "class parameter")->required();
  lb_cmd->add_option("--reps", lb_reps, "replications");
  lb_cmd->add_option("--seed", lb_seed, "master seed");
  lb_cmd->add_option("--delta", lb_delta, "condition-check delta in (0,1)");
  lb_cmd->add_option("--threads", lb_threads, "worker threads");
  lb_cmd->add_option("--constants", lb_constants, "overrides, k=v,...");
  lb_cmd->add_option("--out", lb_out, "output CSV path (default stdout)");

  // modulus
  auto* mod_cmd = app.add_subcommand("modulus", "modulus-of-continuity statistics");
  std::string mod_n = "100,1000";
  std::string mod_delta = "0.01,0.1";
  std::uint64_t mod_reps = 200, mod_seed = 1;
  std::string mod_constants, mod_out;
  mod_cmd->add_option("--n", mod_n, "n grid");
  mod_cmd->add_option("--delta", mod_delta, "window width grid, values in (0,1]");
  mod_cmd->add_option("--reps", mod_reps, "replications");
  mod_cmd->add_option("--seed", mod_seed, "master seed");
  mod_cmd->add_option("--constants", mod_constants, "overrides, k=v,...");
  mod_cmd->add_option("--out", mod_out, "output CSV path (default stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suite");
  std::uint64_t verify_seed = 1;
  unsigned verify_threads = 1;
  std::string verify_constants;
  verify_cmd->add_option("--seed", verify_seed, "suite seed");
  verify_cmd->add_option("--threads", verify_threads, "worker threads");
  verify_cmd->add_option("--constants", verify_constants, "overrides, k=v,...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) {
      return cmd_bounds(bounds_n, bounds_sigma2, bounds_l, bounds_d,
                        bounds_constants, bounds_out);
    }
    if (sim_cmd->parsed()) {
      const ExperimentConfig config = parse_simulate_config(
          sim_config, sim_constants, sim_seed, sim_reps, sim_threads);
      return cmd_simulate(config, sim_out);
    }
    if (lb_cmd->parsed()) {
      return cmd_lower_bound(lb_n, lb_sigma2, lb_reps, lb_seed, lb_delta,
                             lb_threads, lb_constants, lb_out);
    }
    if (mod_cmd->parsed()) {
      return cmd_modulus(mod_n, mod_delta, mod_reps, mod_seed, mod_constants,
                         mod_out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_seed, verify_threads, verify_constants);
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
