#include "suptail/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suptail/empirical.hpp"
#include "suptail/parallel.hpp"
#include "suptail/rng.hpp"

namespace suptail {

namespace {

void require_config(const ExperimentConfig& config) {
  if (config.n < 1) throw std::invalid_argument("config: n must be >= 1");
  if (!(config.sigma2 > 0.0) || !(config.sigma2 <= 1.0)) {
    throw std::invalid_argument("config: sigma2 must lie in (0, 1]");
  }
  if (config.reps < 1) throw std::invalid_argument("config: reps must be >= 1");
  if (config.levels.empty()) throw std::invalid_argument("config: levels are empty");
}

}  // namespace

std::vector<LevelSpec> resolve_levels(const ExperimentConfig& config) {
  require_config(config);
  std::vector<LevelSpec> resolved;
  resolved.reserve(config.levels.size());
  for (const LevelSpec& level : config.levels) {
    LevelSpec out = level;
    if (!level.rule.empty()) {
      if (level.rule == "u") {
        out.value = threshold_u(config.n, config.sigma2, config.L, config.D,
                                config.params);
      } else if (level.rule == "u_bar") {
        out.value = threshold_u_bar(config.sigma2, config.L, config.D, config.params);
      } else if (level.rule == "hat_u") {
        out.value = lower_bound_level(config.n, config.sigma2, config.params);
      } else if (level.rule == "2*sqrt(n)*sigma2") {
        out.value = 2.0 * std::sqrt(static_cast<double>(config.n)) * config.sigma2;
      } else {
        throw std::invalid_argument("config: unknown level rule '" + level.rule + "'");
      }
    }
    resolved.push_back(out);
  }
  for (std::size_t i = 1; i < resolved.size(); ++i) {
    if (!(resolved[i].value > resolved[i - 1].value)) {
      throw std::invalid_argument(
          "config: levels must be strictly increasing after rule resolution");
    }
  }
  return resolved;
}

std::vector<TailEstimate> estimate_tail(const ExperimentConfig& config) {
  const std::vector<LevelSpec> levels = resolve_levels(config);
  const std::size_t nlevels = levels.size();

  const unsigned chunks = chunk_count(config.reps, config.threads);
  std::vector<std::vector<std::uint64_t>> partial(
      chunks, std::vector<std::uint64_t>(nlevels, 0));
  parallel_chunks(config.reps, config.threads,
                  [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    auto& hits = partial[chunk];
    for (std::uint64_t rep = first; rep < last; ++rep) {
      const SamplePath path = sample_uniform(
          config.n, derive_key(config.master_seed, Stream::tail_experiment, rep));
      const double sup = sup_via_increments(path, config.sigma2).value;
      // Levels are increasing: hits at higher levels imply hits below.
      for (std::size_t i = 0; i < nlevels && sup >= levels[i].value; ++i) ++hits[i];
    }
  });

  std::vector<TailEstimate> estimates;
  estimates.reserve(nlevels);
  for (std::size_t i = 0; i < nlevels; ++i) {
    std::uint64_t hits = 0;
    for (const auto& chunk_hits : partial) hits += chunk_hits[i];
    estimates.push_back(make_tail_estimate(levels[i].value, hits, config.reps));
  }
  return estimates;
}

std::vector<TailEstimate> estimate_member_tail(std::uint64_t n, double sigma2,
                                               std::span<const double> levels,
                                               std::uint64_t reps,
                                               std::uint64_t seed, unsigned threads) {
  if (n < 1 || reps < 1) throw std::invalid_argument("n and reps must be >= 1");
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (!(levels[i] > levels[i - 1])) {
      throw std::invalid_argument("levels must be strictly increasing");
    }
  }
  const double nd = static_cast<double>(n);
  const double sqrt_n = std::sqrt(nd);
  const double drift = nd * sigma2;

  const unsigned chunks = chunk_count(reps, threads);
  std::vector<std::vector<std::uint64_t>> partial(
      chunks, std::vector<std::uint64_t>(levels.size(), 0));
  parallel_chunks(reps, threads,
                  [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    auto& hits = partial[chunk];
    for (std::uint64_t rep = first; rep < last; ++rep) {
      CounterRng rng(derive_key(seed, Stream::member_tail, rep));
      std::uint64_t count = 0;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (rng.next_unit() < sigma2) ++count;
      }
      const double s = (static_cast<double>(count) - drift) / sqrt_n;
      for (std::size_t i = 0; i < levels.size() && s >= levels[i]; ++i) ++hits[i];
    }
  });

  std::vector<TailEstimate> estimates;
  estimates.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::uint64_t hits = 0;
    for (const auto& chunk_hits : partial) hits += chunk_hits[i];
    estimates.push_back(make_tail_estimate(levels[i], hits, reps));
  }
  return estimates;
}

namespace {

// Compositions of n into k cells plus a leftover part, walked depth-first in
// lexicographic cell order. The running coefficient is the multinomial
// weight times the cell probabilities, built as a product of exact binomial
// steps in long double: multiply by (remaining - c + 1) and sigma2 first,
// divide by c last, so integer/dyadic instances stay exact.
struct Enumerator {
  double sigma2;
  double deviation_gate;  // |count - n sigma2| >= gate counts as a hit
  double drift;
  std::vector<long double> leftover_pow;  // leftover_mass^r
  long double hit_mass = 0.0L;

  void walk(std::uint64_t cells_left, std::uint64_t remaining, long double coef,
            bool hit) {
    if (cells_left == 0) {
      // remaining points land in the leftover interval, which is no member.
      if (hit) hit_mass += coef * leftover_pow[remaining];
      return;
    }
    long double coef_c = coef;  // c = 0 term
    for (std::uint64_t c = 0; c <= remaining; ++c) {
      if (c > 0) {
        coef_c *= static_cast<long double>(remaining - c + 1);
        coef_c *= static_cast<long double>(sigma2);
        coef_c /= static_cast<long double>(c);
      }
      const bool hit_c =
          hit || std::fabs(static_cast<double>(c) - drift) >= deviation_gate;
      walk(cells_left - 1, remaining - c, coef_c, hit_c);
    }
  }
};

}  // namespace

double exact_tail_small(std::uint64_t n, double sigma2, double v) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
  const std::uint64_t k = static_cast<std::uint64_t>(std::floor(1.0 / sigma2));

  // State count C(n + k, k); refuse anything beyond 1e7 states.
  double states = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    states *= static_cast<double>(n + i) / static_cast<double>(i);
    if (states > 1e7) {
      throw std::invalid_argument(
          "exact_tail_small: state space exceeds 1e7; use Monte Carlo");
    }
  }

  if (v <= 0.0) return 1.0;  // the deviation max is always >= 0

  double leftover = 1.0 - static_cast<double>(k) * sigma2;
  if (leftover < 0.0) leftover = 0.0;

  Enumerator en;
  en.sigma2 = sigma2;
  en.drift = static_cast<double>(n) * sigma2;
  en.deviation_gate = v * std::sqrt(static_cast<double>(n));
  en.leftover_pow.resize(n + 1);
  en.leftover_pow[0] = 1.0L;
  for (std::uint64_t r = 1; r <= n; ++r) {
    en.leftover_pow[r] = en.leftover_pow[r - 1] * static_cast<long double>(leftover);
  }
  en.walk(k, n, 1.0L, false);
  return static_cast<double>(en.hit_mass);
}

std::vector<ComparisonRow> compare_with_bounds(std::span<const TailEstimate> estimates,
                                               std::uint64_t n, double sigma2,
                                               double L, double D,
                                               const BoundParams& params) {
  std::vector<ComparisonRow> rows;
  rows.reserve(estimates.size());
  for (const TailEstimate& est : estimates) {
    ComparisonRow row;
    row.estimate = est;
    try {
      row.bound_main =
          std::min(1.0, sup_tail_bound(n, sigma2, est.v, L, D, params));
    } catch (const bound_not_applicable& e) {
      row.main_reason = e.what();
    }
    try {
      row.bound_gaussian =
          std::min(1.0, gaussian_tail_bound(n, sigma2, est.v, L, D, params));
    } catch (const bound_not_applicable& e) {
      row.gaussian_reason = e.what();
    }
    row.bound_bennett = bennett_bound(n, sigma2, est.v);

    if (!row.bound_main && !row.bound_gaussian) {
      row.dominance = "na";
    } else {
      double tightest = 1.0;
      if (row.bound_main) tightest = std::min(tightest, *row.bound_main);
      if (row.bound_gaussian) tightest = std::min(tightest, *row.bound_gaussian);
      // A bound only counts as violated when the whole confidence interval
      // sits above it; otherwise the data is consistent with the bound.
      row.dominance = (est.ci_low <= tightest) ? "true" : "false";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace suptail
