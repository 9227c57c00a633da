#include <doctest.h>

#include <stdexcept>

#include "suptail/stats.hpp"

using namespace suptail;

TEST_CASE("normal quantile matches reference values") {
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(normal_quantile(0.995) ==
        doctest::Approx(2.5758293035489007).epsilon(1e-12));
  CHECK(normal_quantile(0.975) ==
        doctest::Approx(1.9599639845400542).epsilon(1e-12));
  CHECK(normal_quantile(0.9995) ==
        doctest::Approx(3.2905267314918946).epsilon(1e-12));
  CHECK(normal_quantile(0.2) == doctest::Approx(-normal_quantile(0.8)).epsilon(1e-13));
  CHECK_THROWS_AS(normal_quantile(0.0), std::invalid_argument);
  CHECK_THROWS_AS(normal_quantile(1.0), std::invalid_argument);
}

TEST_CASE("wilson interval boundary behaviour") {
  const auto full = wilson_interval(100, 100, 0.99);
  CHECK(full.second == 1.0);
  CHECK(full.first < 1.0);
  const auto none = wilson_interval(0, 100, 0.99);
  CHECK(none.first == 0.0);
  CHECK(none.second > 0.0);
}

TEST_CASE("wilson interval reference value") {
  const auto ci = wilson_interval(50, 100, 0.95);
  CHECK(ci.first == doctest::Approx(0.4038315303659956).epsilon(1e-12));
  CHECK(ci.second == doctest::Approx(0.5961684696340044).epsilon(1e-12));
  CHECK(ci.first <= 0.5);
  CHECK(ci.second >= 0.5);
}

TEST_CASE("wilson interval rejects bad arguments") {
  CHECK_THROWS_AS(wilson_interval(1, 0, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(5, 4, 0.95), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(1, 2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(wilson_interval(1, 2, 1.0), std::invalid_argument);
}

TEST_CASE("tail estimate wires the interval in") {
  const TailEstimate e = make_tail_estimate(0.75, 25, 100);
  CHECK(e.v == 0.75);
  CHECK(e.p_hat == 0.25);
  CHECK(e.ci_low <= e.p_hat);
  CHECK(e.ci_high >= e.p_hat);
  CHECK(e.ci_low >= 0.0);
  CHECK(e.ci_high <= 1.0);
}
