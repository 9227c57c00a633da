#pragma once

#include <cstdint>
#include <utility>

namespace suptail {

// Monte Carlo tail estimate at one level: hit count over replications plus
// a Wilson score interval.
struct TailEstimate {
  double v = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t reps = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// Inverse standard normal CDF (Wichura's PPND16), accurate to full double
// precision for p in (0, 1).
double normal_quantile(double p);

// Wilson score interval for a binomial proportion. Stable near 0 and 1,
// which is where tail estimation lives. `confidence` is two-sided, in (0,1).
std::pair<double, double> wilson_interval(std::uint64_t hits, std::uint64_t reps,
                                          double confidence);

TailEstimate make_tail_estimate(double v, std::uint64_t hits, std::uint64_t reps,
                                double confidence = 0.99);

}  // namespace suptail
