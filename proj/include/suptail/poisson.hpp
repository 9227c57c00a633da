#pragma once

#include <cstdint>
#include <vector>

#include "suptail/bounds.hpp"
#include "suptail/empirical.hpp"
#include "suptail/rng.hpp"
#include "suptail/stats.hpp"

namespace suptail {

// A Poisson process on [0,1]: the total count is Poisson(rate) and the
// points are i.i.d. uniform given the count.
struct PoissonPath {
  std::vector<double> points;  // sorted
  double rate = 0.0;
  std::uint64_t seed = 0;
};

// Empirical sample of size n coupled with a Poisson process of rate
// (99/100) n: the process is the first eta points of the same unsorted
// uniform stream, eta ~ Poisson((99/100) n) independent of the stream.
// When eta <= n the process counts are dominated by the sample counts on
// every interval.
struct CoupledPair {
  SamplePath uniforms;        // first n of the stream
  std::uint64_t eta = 0;      // Poisson((99/100) n) stopping index
  SamplePath poisson_prefix;  // first eta of the stream
  bool eta_le_n = false;
};

// One draw from Poisson(lambda) off the given stream. Product method for
// small lambda, mode-centered inversion for large lambda; both exact.
std::uint64_t poisson_draw(CounterRng& rng, double lambda);

// log P(Poisson(lambda) = m), computed with lgamma.
double poisson_log_pmf(double lambda, std::uint64_t m);

PoissonPath sample_poisson_process(double rate, std::uint64_t seed);

// Per-cell counts V_j over the k = floor(1/sigma2) cells of width sigma2;
// leftover points excluded.
std::vector<std::uint64_t> cell_counts(const PoissonPath& path, double sigma2);

// Level (3 / (4 sqrt(n))) * log n / log(log n / (n sigma2)) targeted by the
// Poisson cell-count experiment. Requires 0 < sigma2 <= (1/7) log(n)/n, so
// the divisor is at least log 7.
double poisson_target_level(std::uint64_t n, double sigma2);

// Integer cell-count target m* = max(1, round(sqrt(n) * level)), i.e. the
// count at which the Poisson pmf is evaluated. Round half away from zero.
std::uint64_t poisson_target_count(std::uint64_t n, double sigma2);

// Analytic lower bound 1 - exp(-T) on P(max_j V_j >= m*) for the Poisson
// model, with T = (1/sigma2) (n sigma2 / m*)^{m*} e^{-n sigma2} evaluated in
// log space with the integerized target m*.
double analytic_lower_bound(std::uint64_t n, double sigma2);

struct ConditionCheck {
  bool holds = false;
  double log_margin = 0.0;  // log LHS - log RHS
};

// Checks the sufficiency condition (n sigma2 / m*)^{m*} >= sigma2 e^{n sigma2}
// log(1/delta) in log space, with the same integerized m* as
// analytic_lower_bound, so that `holds` implies analytic_lower_bound >= 1-delta.
ConditionCheck check_poisson_condition(std::uint64_t n, double sigma2, double delta);

CoupledPair sample_coupled(std::uint64_t n, std::uint64_t seed);

// Monte Carlo estimate of P(max_j V_j >= m*) over `reps` independent
// Poisson(n) processes. Cell counts of a Poisson process are i.i.d.
// Poisson(n sigma2), so each replication draws the k counts directly and
// stops at the first hit; this is exact in law and keeps n = 1e6 feasible.
TailEstimate poisson_tail_experiment(std::uint64_t n, double sigma2,
                                     std::uint64_t reps, std::uint64_t seed,
                                     unsigned threads = 1);

// Monte Carlo estimate of P(sup over the centered grid class >= u_hat) for
// the empirical model, with u_hat = lower_bound_level(n, sigma2, params).
TailEstimate lower_bound_experiment(std::uint64_t n, double sigma2,
                                    std::uint64_t reps, std::uint64_t seed,
                                    const BoundParams& params,
                                    unsigned threads = 1);

struct CouplingSummary {
  std::uint64_t reps = 0;
  std::uint64_t eta_le_n = 0;          // replications with eta <= n
  std::uint64_t dominance_checked = 0; // cell-count comparisons performed
  bool dominance_all = true;           // dominance held on every such replication
};

// Draws `reps` coupled pairs and, on each replication with eta <= n,
// verifies per-cell dominance of the Poisson prefix by the sample for every
// sigma2 in `sigma2s` (leftover interval included).
CouplingSummary coupling_experiment(std::uint64_t n, std::uint64_t reps,
                                    std::uint64_t seed,
                                    std::span<const double> sigma2s,
                                    unsigned threads = 1);

}  // namespace suptail
