#include "suptail/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "suptail/parallel.hpp"

namespace suptail {

namespace {

void require_poisson_range(std::uint64_t n, double sigma2) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  const double cap = std::log(static_cast<double>(n)) / (7.0 * static_cast<double>(n));
  if (!(sigma2 > 0.0) || !(sigma2 <= cap)) {
    throw std::invalid_argument(
        "sigma2 must lie in (0, log(n)/(7n)] for the Poisson construction");
  }
}

}  // namespace

std::uint64_t poisson_draw(CounterRng& rng, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("poisson_draw: lambda must be > 0");
  }
  if (lambda < 12.0) {
    // Knuth's product method: count uniforms until the product drops under
    // e^{-lambda}.
    const double floor_p = std::exp(-lambda);
    std::uint64_t count = 0;
    double prod = rng.next_unit();
    while (prod > floor_p) {
      ++count;
      prod *= rng.next_unit();
    }
    return count;
  }
  // Mode-centered inversion: spend one uniform, then walk outward from the
  // mode alternating up/down, subtracting pmf mass until the draw lands.
  // pmf values follow the ratio recurrences, so no factorials appear.
  const std::uint64_t mode = static_cast<std::uint64_t>(std::floor(lambda));
  const double pmf_mode = std::exp(poisson_log_pmf(lambda, mode));
  double u = rng.next_unit();
  if (u < pmf_mode) return mode;
  u -= pmf_mode;
  double up_p = pmf_mode;
  double down_p = pmf_mode;
  std::uint64_t up = mode;
  std::uint64_t down = mode;
  while (true) {
    if (up_p > 0.0) {
      up_p *= lambda / static_cast<double>(up + 1);
      ++up;
      if (u < up_p) return up;
      u -= up_p;
    }
    if (down > 0 && down_p > 0.0) {
      down_p *= static_cast<double>(down) / lambda;
      --down;
      if (u < down_p) return down;
      u -= down_p;
    }
    if (up_p < 1e-320 && (down == 0 || down_p < 1e-320)) {
      return up;  // residual mass below 1e-15; attribute it to the far tail
    }
  }
}

double poisson_log_pmf(double lambda, std::uint64_t m) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  const double md = static_cast<double>(m);
  return md * std::log(lambda) - lambda - std::lgamma(md + 1.0);
}

PoissonPath sample_poisson_process(double rate, std::uint64_t seed) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("sample_poisson_process: rate must be > 0");
  }
  CounterRng rng(seed);
  const std::uint64_t count = poisson_draw(rng, rate);
  PoissonPath path;
  path.rate = rate;
  path.seed = seed;
  path.points.resize(count);
  for (auto& p : path.points) p = rng.next_unit();
  std::sort(path.points.begin(), path.points.end());
  return path;
}

std::vector<std::uint64_t> cell_counts(const PoissonPath& path, double sigma2) {
  return cell_counts_sorted(path.points, sigma2);
}

double poisson_target_level(std::uint64_t n, double sigma2) {
  require_poisson_range(n, sigma2);
  const double nd = static_cast<double>(n);
  const double log_n = std::log(nd);
  return 3.0 / (4.0 * std::sqrt(nd)) * log_n / std::log(log_n / (nd * sigma2));
}

std::uint64_t poisson_target_count(std::uint64_t n, double sigma2) {
  const double level = poisson_target_level(n, sigma2);
  const double scaled = std::sqrt(static_cast<double>(n)) * level;
  const double rounded = std::round(scaled);  // half away from zero
  return rounded < 1.0 ? 1 : static_cast<std::uint64_t>(rounded);
}

double analytic_lower_bound(std::uint64_t n, double sigma2) {
  const std::uint64_t m = poisson_target_count(n, sigma2);
  const double md = static_cast<double>(m);
  const double ns2 = static_cast<double>(n) * sigma2;
  const double log_t =
      -std::log(sigma2) + md * (std::log(ns2) - std::log(md)) - ns2;
  if (log_t > 700.0) return 1.0;
  return -std::expm1(-std::exp(log_t));
}

ConditionCheck check_poisson_condition(std::uint64_t n, double sigma2, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  const std::uint64_t m = poisson_target_count(n, sigma2);
  const double md = static_cast<double>(m);
  const double ns2 = static_cast<double>(n) * sigma2;
  const double log_lhs = md * (std::log(ns2) - std::log(md));
  const double log_rhs = std::log(sigma2) + ns2 + std::log(std::log(1.0 / delta));
  ConditionCheck check;
  check.log_margin = log_lhs - log_rhs;
  check.holds = check.log_margin >= 0.0;
  return check;
}

CoupledPair sample_coupled(std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_coupled: n must be >= 1");
  CounterRng eta_rng(derive_key(seed, Stream::coupling, 0));
  const std::uint64_t eta = poisson_draw(eta_rng, 0.99 * static_cast<double>(n));

  const std::uint64_t total = std::max(n, eta);
  std::vector<double> stream(total);
  CounterRng rng(derive_key(seed, Stream::coupling, 1));
  for (auto& p : stream) p = rng.next_unit();

  CoupledPair pair;
  pair.eta = eta;
  pair.eta_le_n = eta <= n;
  pair.uniforms =
      path_from_points(std::vector<double>(stream.begin(), stream.begin() + n), seed);
  pair.poisson_prefix.seed = seed;
  if (eta > 0) {
    pair.poisson_prefix = path_from_points(
        std::vector<double>(stream.begin(), stream.begin() + eta), seed);
  }
  return pair;
}

TailEstimate poisson_tail_experiment(std::uint64_t n, double sigma2,
                                     std::uint64_t reps, std::uint64_t seed,
                                     unsigned threads) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  const std::uint64_t target = poisson_target_count(n, sigma2);
  const double lambda = static_cast<double>(n) * sigma2;
  const std::uint64_t cells = static_cast<std::uint64_t>(std::floor(1.0 / sigma2));

  std::vector<std::uint64_t> partial(chunk_count(reps, threads), 0);
  parallel_chunks(reps, threads,
                  [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    std::uint64_t hits = 0;
    for (std::uint64_t rep = first; rep < last; ++rep) {
      CounterRng rng(derive_key(seed, Stream::poisson_cells, rep));
      for (std::uint64_t j = 0; j < cells; ++j) {
        if (poisson_draw(rng, lambda) >= target) {
          ++hits;
          break;
        }
      }
    }
    partial[chunk] = hits;
  });
  std::uint64_t hits = 0;
  for (std::uint64_t h : partial) hits += h;
  return make_tail_estimate(static_cast<double>(target), hits, reps);
}

TailEstimate lower_bound_experiment(std::uint64_t n, double sigma2,
                                    std::uint64_t reps, std::uint64_t seed,
                                    const BoundParams& params, unsigned threads) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  const double level = lower_bound_level(n, sigma2, params);
  std::vector<std::uint64_t> partial(chunk_count(reps, threads), 0);
  parallel_chunks(reps, threads,
                  [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    std::uint64_t hits = 0;
    for (std::uint64_t rep = first; rep < last; ++rep) {
      const SamplePath path =
          sample_uniform(n, derive_key(seed, Stream::lower_bound, rep));
      if (sup_via_increments(path, sigma2).value >= level) ++hits;
    }
    partial[chunk] = hits;
  });
  std::uint64_t hits = 0;
  for (std::uint64_t h : partial) hits += h;
  return make_tail_estimate(level, hits, reps);
}

CouplingSummary coupling_experiment(std::uint64_t n, std::uint64_t reps,
                                    std::uint64_t seed,
                                    std::span<const double> sigma2s,
                                    unsigned threads) {
  if (reps == 0) throw std::invalid_argument("reps must be >= 1");
  std::vector<CouplingSummary> partial(chunk_count(reps, threads));
  parallel_chunks(reps, threads,
                  [&](unsigned chunk, std::uint64_t first, std::uint64_t last) {
    CouplingSummary& local = partial[chunk];
    for (std::uint64_t rep = first; rep < last; ++rep) {
      const CoupledPair pair =
          sample_coupled(n, derive_key(seed, Stream::tail_experiment, rep));
      ++local.reps;
      if (!pair.eta_le_n) continue;
      ++local.eta_le_n;
      for (double s2 : sigma2s) {
        const auto sample_counts = cell_counts_sorted(pair.uniforms.points, s2);
        const auto prefix_counts =
            cell_counts_sorted(pair.poisson_prefix.points, s2);
        ++local.dominance_checked;
        std::uint64_t sample_in_cells = 0;
        std::uint64_t prefix_in_cells = 0;
        for (std::size_t j = 0; j < sample_counts.size(); ++j) {
          sample_in_cells += sample_counts[j];
          prefix_in_cells += prefix_counts[j];
          if (prefix_counts[j] > sample_counts[j]) local.dominance_all = false;
        }
        // Leftover interval as well.
        const std::uint64_t sample_left = pair.uniforms.n() - sample_in_cells;
        const std::uint64_t prefix_left = pair.poisson_prefix.n() - prefix_in_cells;
        if (prefix_left > sample_left) local.dominance_all = false;
      }
    }
  });
  CouplingSummary total;
  total.reps = reps;
  for (const auto& p : partial) {
    total.eta_le_n += p.eta_le_n;
    total.dominance_checked += p.dominance_checked;
    total.dominance_all = total.dominance_all && p.dominance_all;
  }
  return total;
}

}  // namespace suptail
