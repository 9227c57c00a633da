#include "suptail/grid_class.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace suptail {

namespace {

void require_index(const GridClassSpec& spec, std::uint64_t j) {
  if (j < 1 || j > spec.k) throw std::out_of_range("member index out of range");
}

void require_measure(const GridClassSpec& spec, std::span<const double> nu) {
  if (nu.size() != spec.k + 1) {
    throw std::invalid_argument("measure must have one weight per cell plus leftover");
  }
  double total = 0.0;
  for (double w : nu) {
    if (!(w >= 0.0)) throw std::invalid_argument("measure weights must be >= 0");
    total += w;
  }
  if (std::fabs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("measure weights must sum to 1 within 1e-12");
  }
}

}  // namespace

GridClassSpec build_grid_class(double sigma2, bool centered) {
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
  const double kd = std::floor(1.0 / sigma2);
  if (kd > 9007199254740992.0) {  // 2^53: cell count no longer exact
    throw std::invalid_argument(
        "build_grid_class: 1/sigma2 exceeds 2^53; use the increment-based "
        "supremum, which handles arbitrarily small sigma2");
  }
  GridClassSpec spec;
  spec.sigma2 = sigma2;
  spec.k = static_cast<std::uint64_t>(kd);
  spec.centered = centered;
  return spec;
}

double evaluate_member(const GridClassSpec& spec, std::uint64_t j, double x) {
  require_index(spec, j);
  const double lo = static_cast<double>(j - 1) * spec.sigma2;
  const double hi = static_cast<double>(j) * spec.sigma2;
  const double indicator = (x >= lo && x < hi) ? 1.0 : 0.0;
  return spec.centered ? indicator - spec.sigma2 : indicator;
}

Moments member_moments(const GridClassSpec& spec, std::uint64_t j) {
  require_index(spec, j);
  if (spec.centered) {
    return {0.0, spec.sigma2 * (1.0 - spec.sigma2)};
  }
  return {spec.sigma2, spec.sigma2};
}

double l1_distance(const GridClassSpec& spec, std::uint64_t i, std::uint64_t j,
                   std::span<const double> nu) {
  require_index(spec, i);
  require_index(spec, j);
  require_measure(spec, nu);
  if (i == j) return 0.0;
  // Disjoint cells: |f_i - f_j| is 1 on both cells, 0 elsewhere.
  return nu[i - 1] + nu[j - 1];
}

CoverResult greedy_cover(const GridClassSpec& spec, std::span<const double> nu,
                         double epsilon) {
  require_measure(spec, nu);
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (spec.k > 100000000ull) {
    throw std::invalid_argument("greedy_cover: class too large to enumerate");
  }
  const std::size_t k = static_cast<std::size_t>(spec.k);
  CoverResult result;
  result.epsilon = epsilon;
  std::vector<double> min_dist(k, std::numeric_limits<double>::infinity());
  for (;;) {
    std::size_t farthest = 0;
    for (std::size_t j = 1; j < k; ++j) {
      if (min_dist[j] > min_dist[farthest]) farthest = j;
    }
    if (min_dist[farthest] < epsilon) break;  // strict covering reached
    result.centers.push_back(static_cast<std::uint64_t>(farthest + 1));
    for (std::size_t j = 0; j < k; ++j) {
      const double d = (j == farthest) ? 0.0 : nu[farthest] + nu[j];
      min_dist[j] = std::min(min_dist[j], d);
    }
  }
  result.m = result.centers.size();
  return result;
}

DenseFit fit_dense_parameters(const GridClassSpec& spec,
                              std::span<const double> epsilon_grid,
                              const std::vector<std::vector<double>>& measures) {
  if (epsilon_grid.empty()) throw std::invalid_argument("epsilon grid is empty");
  if (measures.empty()) throw std::invalid_argument("measure list is empty");

  std::vector<double> worst_m(epsilon_grid.size(), 0.0);
  for (std::size_t e = 0; e < epsilon_grid.size(); ++e) {
    for (const auto& nu : measures) {
      const CoverResult cover = greedy_cover(spec, nu, epsilon_grid[e]);
      worst_m[e] = std::max(worst_m[e], static_cast<double>(cover.m));
    }
  }

  // Least squares of log m on log eps; a degenerate grid has no slope.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double cnt = static_cast<double>(epsilon_grid.size());
  for (std::size_t e = 0; e < epsilon_grid.size(); ++e) {
    const double x = std::log(epsilon_grid[e]);
    const double y = std::log(worst_m[e]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double var = sxx - sx * sx / cnt;
  if (!(var > 1e-24)) {
    throw std::invalid_argument("fit_dense_parameters: degenerate epsilon grid");
  }
  const double slope = (sxy - sx * sy / cnt) / var;

  DenseFit fit;
  fit.l_hat = std::max(1.0, -slope);
  double d = 1.0;
  for (std::size_t e = 0; e < epsilon_grid.size(); ++e) {
    d = std::max(d, worst_m[e] * std::pow(epsilon_grid[e], fit.l_hat));
  }
  fit.d_hat = d;
  return fit;
}

}  // namespace suptail
