#include "suptail/bounds.hpp"

#include <cmath>
#include <sstream>

namespace suptail {

namespace {

void require_regime_inputs(std::uint64_t n, double sigma2) {
  if (n < 2) throw std::invalid_argument("n must be an integer >= 2");
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
}

void require_class_params(double L, double D) {
  if (!(L >= 1.0) || !std::isfinite(L)) throw std::invalid_argument("L must be >= 1");
  if (!(D >= 1.0) || !std::isfinite(D)) throw std::invalid_argument("D must be >= 1");
}

}  // namespace

void BoundParams::validate() const {
  std::ostringstream bad;
  auto check_pos = [&bad](const char* name, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) bad << name << " must be > 0; ";
  };
  check_pos("C1", C1);
  check_pos("C2", C2);
  check_pos("C3", C3);
  check_pos("C4", C4);
  check_pos("C5", C5);
  check_pos("C6", C6);
  check_pos("K", K);
  check_pos("alpha", alpha);
  check_pos("C", C);
  check_pos("alpha_bar", alpha_bar);
  check_pos("A0", A0);
  check_pos("Cbar", Cbar);
  if (!(C2 < 1.0)) bad << "C2 must be < 1; ";
  const std::string msg = bad.str();
  if (!msg.empty()) throw std::invalid_argument("BoundParams: " + msg);
}

Regime classify_regime(std::uint64_t n, double sigma2) {
  require_regime_inputs(n, sigma2);
  const double log_n = std::log(static_cast<double>(n));
  // n^-200 underflows for n > 41, so compare logs instead of values.
  if (std::log(sigma2) <= -200.0 * log_n) return Regime::A;
  if (sigma2 <= log_n / (8.0 * static_cast<double>(n))) return Regime::B;
  return Regime::C;
}

double threshold_u(std::uint64_t n, double sigma2, double L, double D,
                   const BoundParams& params) {
  require_class_params(L, D);
  const Regime regime = classify_regime(n, sigma2);
  const double nd = static_cast<double>(n);
  const double sqrt_n = std::sqrt(nd);
  const double log_n = std::log(nd);
  const double log_d = std::log(D);
  switch (regime) {
    case Regime::A:
      return params.C3 / sqrt_n * (L + log_d / log_n);
    case Regime::B: {
      const double z = log_n / (nd * sigma2);  // >= 8 in case B
      return params.C4 / sqrt_n * (L * log_n / std::log(z) + log_d);
    }
    default:
      return params.C5 / sqrt_n * (nd * sigma2 + L * log_n + log_d);
  }
}

double threshold_u_bar(double sigma2, double L, double D, const BoundParams& params) {
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
  require_class_params(L, D);
  const double sigma = std::sqrt(sigma2);
  return params.C6 * sigma *
         (std::pow(L, 0.75) * std::sqrt(std::log(2.0 / sigma)) +
          std::pow(std::log(D), 0.75));
}

double sup_tail_bound(std::uint64_t n, double sigma2, double v, double L, double D,
                      const BoundParams& params) {
  const double u = threshold_u(n, sigma2, L, D, params);
  if (!(v >= u)) {
    throw bound_not_applicable("sup_tail_bound: v below threshold u(sigma)", u);
  }
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double ratio = v / (sqrt_n * sigma2);
  if (!(ratio > 1.0)) {
    throw bound_not_applicable("sup_tail_bound: v / (sqrt(n) sigma^2) must exceed 1",
                               sqrt_n * sigma2);
  }
  return params.C1 * std::exp(-params.C2 * sqrt_n * v * std::log(ratio));
}

double gaussian_tail_bound(std::uint64_t n, double sigma2, double v, double L,
                           double D, const BoundParams& params) {
  if (classify_regime(n, sigma2) != Regime::C) {
    throw bound_not_applicable("gaussian_tail_bound: requires case C", sigma2);
  }
  const double u_bar = threshold_u_bar(sigma2, L, D, params);
  if (!(v >= u_bar)) {
    throw bound_not_applicable("gaussian_tail_bound: v below u_bar(sigma)", u_bar);
  }
  const double cap = std::sqrt(static_cast<double>(n)) * sigma2;
  if (!(v <= cap)) {
    throw bound_not_applicable("gaussian_tail_bound: v above sqrt(n) sigma^2", cap);
  }
  return params.C * std::exp(-params.alpha * v * v / sigma2);
}

double midrange_tail_bound(std::uint64_t n, double sigma2, double v, double L,
                           double D, const BoundParams& params) {
  if (classify_regime(n, sigma2) != Regime::C) {
    throw bound_not_applicable("midrange_tail_bound: requires case C", sigma2);
  }
  const double u_bar = threshold_u_bar(sigma2, L, D, params);
  if (!(v > u_bar)) {
    throw bound_not_applicable("midrange_tail_bound: v must exceed u_bar(sigma)",
                               u_bar);
  }
  const double u = threshold_u(n, sigma2, L, D, params);
  if (!(v <= u)) {
    throw bound_not_applicable("midrange_tail_bound: v above u(sigma)", u);
  }
  return params.C * std::exp(-params.alpha_bar * v * v / sigma2);
}

double bennett_bound(std::uint64_t n, double sigma2, double v) {
  require_regime_inputs(n, sigma2);
  if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("v must be >= 0");
  const double ns2 = static_cast<double>(n) * sigma2;
  const double w = v / (std::sqrt(static_cast<double>(n)) * sigma2);
  return std::exp(-ns2 * ((1.0 + w) * std::log1p(w) - w));
}

double bennett_simplified(std::uint64_t n, double sigma2, double v,
                          const BoundParams& params) {
  require_regime_inputs(n, sigma2);
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double gate = 2.0 * sqrt_n * sigma2;
  if (!(v > gate)) {
    throw bound_not_applicable("bennett_simplified: requires v > 2 sqrt(n) sigma^2",
                               gate);
  }
  return std::exp(-params.K * sqrt_n * v * std::log(v / (sqrt_n * sigma2)));
}

double sup_tail_bound_at_multiplier(std::uint64_t n, double sigma2, double A,
                                    double L, double D, const BoundParams& params) {
  require_regime_inputs(n, sigma2);
  require_class_params(L, D);
  const double ns2 = static_cast<double>(n) * sigma2;
  const double gate = L * std::log(static_cast<double>(n)) + std::log(D);
  if (!(ns2 > gate)) {
    throw bound_not_applicable(
        "sup_tail_bound_at_multiplier: requires n sigma^2 > L log n + log D", gate);
  }
  if (!(A >= params.A0)) {
    throw bound_not_applicable("sup_tail_bound_at_multiplier: A below A0", params.A0);
  }
  return std::exp(-std::sqrt(A) * ns2 / 2.0);
}

double lower_bound_level(std::uint64_t n, double sigma2, const BoundParams& params) {
  const Regime regime = classify_regime(n, sigma2);
  const double nd = static_cast<double>(n);
  const double sqrt_n = std::sqrt(nd);
  switch (regime) {
    case Regime::A:
      return params.Cbar / sqrt_n;
    case Regime::B: {
      const double log_n = std::log(nd);
      return params.Cbar / sqrt_n * log_n / std::log(log_n / (nd * sigma2));
    }
    default: {
      const double sigma = std::sqrt(sigma2);
      return params.Cbar * sigma * std::sqrt(std::log(2.0 / sigma));
    }
  }
}

}  // namespace suptail
