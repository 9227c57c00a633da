#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace suptail {

// Which branch of the threshold/bound formulas a pair (n, sigma^2) falls
// into. Natural log throughout.
//
//   A:  sigma^2 <= n^-200
//   B:  n^-200  <  sigma^2 <= log(n) / (8n)
//   C:  log(n)/(8n) < sigma^2 <= 1
//
// Boundaries belong to the lower-labelled case. The A/B comparison is done
// in log space so it stays exact for every representable sigma^2.
enum class Regime { A, B, C };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::A: return "A";
    case Regime::B: return "B";
    default: return "C";
  }
}

// Universal constants of the bound family. None of them are pinned by
// theory; the defaults are calibrated so that the non-vacuity and dominance
// diagnostics in the verify suite hold over the sweep grids. All of them
// can be overridden per run.
struct BoundParams {
  double C1 = 2.0;    // prefactor of the main sup tail bound
  double C2 = 0.5;    // exponent rate of the main sup tail bound (< 1)
  double C3 = 20.0;   // threshold scale, case A
  double C4 = 20.0;   // threshold scale, case B
  double C5 = 20.0;   // threshold scale, case C
  double C6 = 20.0;   // threshold scale of u_bar
  double K = 0.25;    // rate of the simplified Bennett form
  double alpha = 0.125;      // rate of the Gaussian-range bound
  double C = 2.0;            // prefactor of the Gaussian-range bound
  double alpha_bar = 0.125;  // rate of the mid-range (gap) bound
  double A0 = 16.0;          // minimal multiplier for the multiplier bound
  double Cbar = 0.5;         // scale of the lower-bound level u_hat

  // Throws std::invalid_argument unless every field is strictly positive
  // and C2 < 1.
  void validate() const;
};

// Raised when a bound evaluator is asked for a level outside its validity
// range. Carries the violated threshold so callers can report it.
class bound_not_applicable : public std::runtime_error {
 public:
  bound_not_applicable(std::string reason, double threshold)
      : std::runtime_error(std::move(reason)), threshold_(threshold) {}
  double threshold() const { return threshold_; }

 private:
  double threshold_;
};

// Requires n >= 2 and 0 < sigma2 <= 1.
Regime classify_regime(std::uint64_t n, double sigma2);

// Threshold u(sigma) above which the main sup tail bound applies, in
// normalized-sum units. L >= 1 and D >= 1 are the covering exponent and
// parameter of the function class.
double threshold_u(std::uint64_t n, double sigma2, double L, double D,
                   const BoundParams& params);

// Threshold u_bar(sigma) = C6 * sigma * (L^{3/4} sqrt(log(2/sigma)) +
// (log D)^{3/4}) below which the Gaussian-range bound stops applying.
double threshold_u_bar(double sigma2, double L, double D, const BoundParams& params);

// Main tail bound C1 * exp(-C2 sqrt(n) v log(v / (sqrt(n) sigma^2))) for the
// supremum over the class, valid for v >= u(sigma). Returned unclamped; the
// report layer clamps to 1.
double sup_tail_bound(std::uint64_t n, double sigma2, double v, double L, double D,
                      const BoundParams& params);

// Gaussian-range bound C * exp(-alpha v^2 / sigma^2), valid in case C for
// u_bar(sigma) <= v <= sqrt(n) sigma^2.
double gaussian_tail_bound(std::uint64_t n, double sigma2, double v, double L,
                           double D, const BoundParams& params);

// Mid-range bound C * exp(-alpha_bar v^2 / sigma^2) covering the band
// u_bar(sigma) < v <= u(sigma) in case C, where neither of the two bounds
// above applies directly. Meaningful when L and D are bounded.
double midrange_tail_bound(std::uint64_t n, double sigma2, double v, double L,
                           double D, const BoundParams& params);

// Bennett's inequality for a single normalized sum of centered variables
// bounded by 1 with variance proxy sigma^2:
//   exp{-n sigma^2 [(1+w) log(1+w) - w]},  w = v / (sqrt(n) sigma^2).
// Defined for v >= 0; equals 1 at v = 0 and is strictly decreasing.
double bennett_bound(std::uint64_t n, double sigma2, double v);

// Simplified exponential form exp(-K sqrt(n) v log(v / (sqrt(n) sigma^2))),
// valid for v > 2 sqrt(n) sigma^2 (strict).
double bennett_simplified(std::uint64_t n, double sigma2, double v,
                          const BoundParams& params);

// Bound exp(-sqrt(A) n sigma^2 / 2) on the tail at level v = A sqrt(n) sigma^2,
// valid when n sigma^2 > L log n + log D (strict) and A >= A0.
double sup_tail_bound_at_multiplier(std::uint64_t n, double sigma2, double A,
                                    double L, double D, const BoundParams& params);

// Level u_hat(sigma) at which the grid indicator class keeps the supremum
// with probability close to 1:
//   case A: Cbar / sqrt(n)
//   case B: Cbar / sqrt(n) * log(n) / log(log(n) / (n sigma^2))
//   case C: Cbar * sigma * sqrt(log(2 / sigma))
double lower_bound_level(std::uint64_t n, double sigma2, const BoundParams& params);

}  // namespace suptail
