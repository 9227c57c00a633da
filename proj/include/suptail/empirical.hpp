#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "suptail/grid_class.hpp"

namespace suptail {

// A sorted i.i.d. uniform sample on [0,1]. Immutable after construction;
// the seed records the stream that produced it.
struct SamplePath {
  std::vector<double> points;  // sorted ascending, all in [0,1]
  std::uint64_t seed = 0;

  std::uint64_t n() const { return points.size(); }
};

// n i.i.d. uniform draws from the counter-based generator keyed by `key`,
// sorted. Requires n >= 1.
SamplePath sample_uniform(std::uint64_t n, std::uint64_t key);

// Wraps externally supplied points (any order) after validating they lie in
// [0,1]; sorts them.
SamplePath path_from_points(std::vector<double> points, std::uint64_t seed = 0);

// F_n(x): fraction of sample points strictly below x. Requires 0 < x <= 1.
double empirical_cdf(const SamplePath& path, double x);

// G_n(x) = sqrt(n) (F_n(x) - x). Requires 0 < x <= 1.
double normalized_process(const SamplePath& path, double x);

struct SupResult {
  double value = 0.0;
  // 1-based index of the lowest cell attaining the max. Double because the
  // cell count floor(1/sigma2) may exceed any integer type for tiny sigma2.
  double cell = 1.0;
};

// sup over the centered grid class of |S_n(f)| computed from per-cell
// increments: max_j |N_j - n sigma2| / sqrt(n) over cells j = 1..k, where
// empty cells contribute n sigma2 / sqrt(n). Handles arbitrarily small
// sigma2 (cells are scanned sparsely through the sorted points).
SupResult sup_via_increments(const SamplePath& path, double sigma2);

// The same supremum computed the slow way: explicit summation of
// evaluate_member over the sample for every member. Requires a centered
// spec. Kept independent of sup_via_increments on purpose; the two must
// agree to float accuracy on every path.
double sup_direct(const SamplePath& path, const GridClassSpec& spec);

// Exact sup over |t - s| <= delta of |G_n(t) - G_n(s)|, s, t in [0,1]
// (G_n(0) := 0). Requires 0 < delta <= 1.
//
// G_n is left-continuous, drifts down at slope sqrt(n) between sample
// points and jumps up at them, so the supremum is attained (or approached)
// only at breakpoints:
//   - count-heavy windows [x_i, x_j + eps): the sup picks up every point in
//     [x_i, x_j] and pays drift x_j - x_i, admissible iff x_j - x_i < delta
//     (strict: at exactly delta the right endpoint cannot be covered);
//   - drift-heavy windows (x_i, t]: t at a sample point (pre-jump value),
//     at the domain end 1, or at the window limit x_i + delta, admissible
//     for gaps up to delta inclusive.
// Both families reduce to sliding-window extrema over the sorted unique
// values, so the scan is exact and O(n log n).
double modulus_statistic(const SamplePath& path, double delta);

// Per-cell counts of a sorted point set over the k = floor(1/sigma2) cells
// of width sigma2; points in the leftover [k sigma2, 1) are excluded.
// Requires k <= 1e8 (the result is materialized).
std::vector<std::uint64_t> cell_counts_sorted(std::span<const double> sorted_points,
                                              double sigma2);

}  // namespace suptail
