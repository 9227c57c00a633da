#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "suptail/bounds.hpp"
#include "suptail/stats.hpp"

namespace suptail {

// A level to score: either a literal value or a named rule resolved against
// (n, sigma2, L, D, params). Known rules: "u", "u_bar", "hat_u",
// "2*sqrt(n)*sigma2".
struct LevelSpec {
  std::string rule;   // empty for literal levels
  double value = 0.0; // literal value, or the resolved value after resolution
};

struct ExperimentConfig {
  std::uint64_t n = 0;
  double sigma2 = 0.0;
  std::vector<LevelSpec> levels;
  std::uint64_t reps = 0;
  std::uint64_t master_seed = 0;
  BoundParams params;
  double L = 1.0;
  double D = 1.0;
  unsigned threads = 1;
};

// Resolves named rules to numeric levels. Throws std::invalid_argument on
// an unknown rule, an empty list, or a list that is not strictly increasing
// after resolution.
std::vector<LevelSpec> resolve_levels(const ExperimentConfig& config);

// Tail estimates for every level of the config. Each replication computes
// the increment supremum once and scores all levels against it, so the
// estimates are comonotone across levels by construction. Deterministic
// given master_seed, for any thread count.
std::vector<TailEstimate> estimate_tail(const ExperimentConfig& config);

// One-sided tail P(S_n(f_1) >= v) of the first centered member, simulated
// by direct counting. Used to compare against Bennett's inequality, which
// bounds exactly this quantity.
std::vector<TailEstimate> estimate_member_tail(std::uint64_t n, double sigma2,
                                               std::span<const double> levels,
                                               std::uint64_t reps,
                                               std::uint64_t seed,
                                               unsigned threads = 1);

// Exact P(max_j |N_j - n sigma2| / sqrt(n) >= v) by enumeration of the
// multinomial cell counts (leftover mass included as an extra part).
// Requires the state count C(n + k, k) to stay at or below 1e7; throws
// otherwise, advising Monte Carlo. Probabilities are accumulated in long
// double from exact multinomial coefficients, so dyadic inputs give exact
// answers.
double exact_tail_small(std::uint64_t n, double sigma2, double v);

// One comparison row per level: the empirical estimate next to every bound
// that applies at that level, clamped to 1 for reporting.
struct ComparisonRow {
  TailEstimate estimate;
  std::optional<double> bound_main;      // main sup tail bound, clamped
  std::string main_reason;               // why not applicable, when absent
  std::optional<double> bound_gaussian;  // Gaussian-range bound, clamped
  std::string gaussian_reason;
  double bound_bennett = 1.0;            // single-member reference, always defined
  // "true" / "false" / "na". True when no applicable bound is statistically
  // unambiguously violated, i.e. the Wilson lower bound stays at or below
  // every applicable bound. "na" when no bound applies at this level.
  std::string dominance;
};

std::vector<ComparisonRow> compare_with_bounds(std::span<const TailEstimate> estimates,
                                               std::uint64_t n, double sigma2,
                                               double L, double D,
                                               const BoundParams& params);

}  // namespace suptail
