#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace suptail {

// The grid indicator class on [0,1]: k = floor(1/sigma2) cells of width
// sigma2, member j the indicator of [(j-1) sigma2, j sigma2), optionally
// centered by subtracting sigma2. The leftover interval [k sigma2, 1)
// belongs to no cell. Members are closed-form, never tabulated.
struct GridClassSpec {
  double sigma2 = 1.0;
  std::uint64_t k = 1;
  bool centered = true;
};

// A covering of the class by a subset of its members: every member lies
// within L1(nu) distance strictly less than epsilon of some center.
struct CoverResult {
  std::vector<std::uint64_t> centers;  // 1-based member indices
  double epsilon = 0.0;
  std::uint64_t m = 0;
};

struct Moments {
  double mean = 0.0;
  double second = 0.0;
};

// Least-squares envelope for the covering-number law m <= D eps^-L.
struct DenseFit {
  double d_hat = 1.0;
  double l_hat = 1.0;
};

// Requires 0 < sigma2 <= 1 and 1/sigma2 <= 2^53 so the cell count is exact.
GridClassSpec build_grid_class(double sigma2, bool centered);

// Value of member j (1 <= j <= k) at x in [0,1].
double evaluate_member(const GridClassSpec& spec, std::uint64_t j, double x);

// Exact moments under the uniform law on [0,1]:
//   centered:   mean 0,        second moment sigma2 (1 - sigma2)
//   uncentered: mean sigma2,   second moment sigma2
Moments member_moments(const GridClassSpec& spec, std::uint64_t j);

// L1(nu) distance between members i and j. nu assigns probabilities to the
// k cells plus the leftover interval (size k+1, summing to 1 within 1e-12).
// For i != j this is nu(cell i) + nu(cell j); the centering shift cancels.
double l1_distance(const GridClassSpec& spec, std::uint64_t i, std::uint64_t j,
                   std::span<const double> nu);

// Greedy farthest-point cover at radius epsilon: repeatedly promotes the
// member farthest from the current centers (lowest index on ties) until
// every member is strictly within epsilon of a center. Deterministic.
CoverResult greedy_cover(const GridClassSpec& spec, std::span<const double> nu,
                         double epsilon);

// Fits log m <= log D - L log eps over the worst measure per epsilon and
// reports the minimal envelope with D >= 1, L >= 1. Needs at least two
// distinct epsilon values and a nonempty measure list.
DenseFit fit_dense_parameters(const GridClassSpec& spec,
                              std::span<const double> epsilon_grid,
                              const std::vector<std::vector<double>>& measures);

}  // namespace suptail
