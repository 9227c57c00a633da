#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <vector>

#include "suptail/empirical.hpp"
#include "suptail/rng.hpp"

using namespace suptail;

namespace {

// Grid-scan oracle for the modulus statistic: evaluate G_n on a uniform
// grid and take backward-looking sliding-window extrema. Every grid pair is
// a valid (s, t) pair, so the scan never exceeds the exact supremum, and it
// undershoots by at most a few drift steps sqrt(n)/res.
double modulus_grid_oracle(const SamplePath& path, double delta, std::size_t res) {
  const double sq = std::sqrt(static_cast<double>(path.n()));
  std::vector<double> g(res + 1);
  std::size_t idx = 0;
  for (std::size_t i = 0; i <= res; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(res);
    while (idx < path.points.size() && path.points[idx] < x) ++idx;
    g[i] = static_cast<double>(idx) / sq - sq * x;
  }
  const auto w = static_cast<std::size_t>(std::floor(delta * static_cast<double>(res)));
  double best = 0.0;
  std::deque<std::size_t> mins, maxs;
  for (std::size_t i = 0; i <= res; ++i) {
    while (!mins.empty() && g[mins.back()] >= g[i]) mins.pop_back();
    mins.push_back(i);
    while (!maxs.empty() && g[maxs.back()] <= g[i]) maxs.pop_back();
    maxs.push_back(i);
    while (mins.front() + w < i) mins.pop_front();
    while (maxs.front() + w < i) maxs.pop_front();
    best = std::max(best, std::max(g[i] - g[mins.front()], g[maxs.front()] - g[i]));
  }
  return best;
}

}  // namespace

TEST_CASE("uniform sampling is deterministic and in range") {
  const SamplePath a = sample_uniform(5, 12345);
  const SamplePath b = sample_uniform(5, 12345);
  CHECK(a.points == b.points);
  CHECK(std::is_sorted(a.points.begin(), a.points.end()));
  for (double x : a.points) {
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
  }
  CHECK_THROWS_AS(sample_uniform(0, 1), std::invalid_argument);
}

TEST_CASE("uniform sample mean sits in the CLT band") {
  const SamplePath path = sample_uniform(1000000, 777);
  double mean = 0.0;
  for (double x : path.points) mean += x;
  mean /= 1e6;
  CHECK(mean >= 0.497);
  CHECK(mean <= 0.503);
}

TEST_CASE("empirical cdf uses strict inequality") {
  const SamplePath single = path_from_points({0.3});
  CHECK(empirical_cdf(single, 0.5) == 1.0);
  CHECK(empirical_cdf(single, 0.3) == 0.0);
  const SamplePath three = path_from_points({0.1, 0.2, 0.9});
  CHECK(empirical_cdf(three, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(empirical_cdf(three, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(empirical_cdf(three, 1.5), std::invalid_argument);
}

TEST_CASE("normalized process") {
  const SamplePath single = path_from_points({0.3});
  CHECK(normalized_process(single, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  // F_n(1) = 1 for interior points, so G_n(1) = 0
  CHECK(normalized_process(single, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  // a point at exactly 1 is never counted
  const SamplePath at_one = path_from_points({1.0});
  CHECK(normalized_process(at_one, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("sup via increments on crafted paths") {
  // all four points in the first of two cells
  const SamplePath packed = path_from_points({0.1, 0.2, 0.3, 0.4});
  const SupResult r = sup_via_increments(packed, 0.5);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.cell == 1.0);
  // balanced counts: deviation zero
  const SamplePath balanced = path_from_points({0.1, 0.2, 0.6, 0.7});
  CHECK(sup_via_increments(balanced, 0.5).value == doctest::Approx(0.0));
  // a single leftover point: every cell is empty, deviation n sigma2 / sqrt(n)
  const SamplePath leftover = path_from_points({0.95});
  const SupResult rl = sup_via_increments(leftover, 0.3);
  CHECK(rl.value == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(rl.cell == 1.0);
}

TEST_CASE("sup via increments handles vanishing sigma2") {
  // k = 1e300 cells: counts resolve sparsely, empty cells contribute ~0
  const SamplePath path = sample_uniform(100, 42);
  const SupResult r = sup_via_increments(path, 1e-300);
  CHECK(r.value == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("direct and increment suprema agree") {
  CounterRng rng(9001);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = 2 + rng.next_u64() % 400;
    const double sigma2 = std::exp(std::log(1e-2) * rng.next_unit());
    const SamplePath path = sample_uniform(n, rng.next_u64());
    const GridClassSpec spec = build_grid_class(sigma2, true);
    CHECK(sup_direct(path, spec) ==
          doctest::Approx(sup_via_increments(path, sigma2).value).epsilon(1e-12));
  }
  const SamplePath packed = path_from_points({0.1, 0.2, 0.3, 0.4});
  CHECK(sup_direct(packed, build_grid_class(0.5, true)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(sup_direct(packed, build_grid_class(0.5, false)),
                  std::invalid_argument);
}

TEST_CASE("merging cells scales the supremum by at most the merge factor") {
  CounterRng rng(5150);
  for (int i = 0; i < 50; ++i) {
    const SamplePath path = sample_uniform(200 + rng.next_u64() % 800, rng.next_u64());
    const double sigma2 = 0.002 + 0.01 * rng.next_unit();
    const double base = sup_via_increments(path, sigma2).value;
    for (std::uint64_t a : {2ull, 3ull, 7ull}) {
      CHECK(sup_via_increments(path, static_cast<double>(a) * sigma2).value <=
            static_cast<double>(a) * base + 1e-12);
    }
  }
}

TEST_CASE("modulus statistic: single point") {
  const SamplePath path = path_from_points({0.5});
  const double exact = modulus_statistic(path, 0.1);
  CHECK(exact == doctest::Approx(1.0).epsilon(1e-12));
  const double oracle = modulus_grid_oracle(path, 0.1, 1000000);
  CHECK(oracle <= exact + 1e-9);
  CHECK(exact <= oracle + 1e-4);
}

TEST_CASE("modulus statistic: uniform grid path") {
  // points at i/n with window exactly one spacing: every admissible window
  // nets one jump minus one drift step
  const std::uint64_t n = 8;
  std::vector<double> pts;
  for (std::uint64_t i = 1; i <= n; ++i) {
    pts.push_back(static_cast<double>(i) / static_cast<double>(n));
  }
  const SamplePath path = path_from_points(pts);
  const double exact = modulus_statistic(path, 1.0 / static_cast<double>(n));
  CHECK(exact == doctest::Approx(0.35355339059327373).epsilon(1e-12));
  CHECK(exact <= 2.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("modulus statistic: unconstrained window is the full range") {
  const SamplePath path = sample_uniform(37, 99);
  const double exact = modulus_statistic(path, 1.0);
  const double oracle = modulus_grid_oracle(path, 1.0, 1000000);
  CHECK(oracle <= exact + 1e-9);
  CHECK(exact <= oracle + 1e-3);
}

TEST_CASE("modulus statistic matches the grid-scan oracle") {
  CounterRng rng(31337);
  for (const std::uint64_t n : {3ull, 7ull, 16ull}) {
    for (const double delta : {0.05, 0.3}) {
      const SamplePath path = sample_uniform(n, rng.next_u64());
      const double exact = modulus_statistic(path, delta);
      const double oracle = modulus_grid_oracle(path, delta, 200000);
      CHECK(oracle <= exact + 1e-9);
      CHECK(exact <= oracle + 5e-4);
    }
  }
  CHECK_THROWS_AS(modulus_statistic(sample_uniform(3, 1), 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(modulus_statistic(sample_uniform(3, 1), 1.5),
                  std::invalid_argument);
}

TEST_CASE("cell counts over sorted points") {
  const SamplePath path = path_from_points({0.05, 0.2, 0.21, 0.5, 0.95});
  const auto counts = cell_counts_sorted(path.points, 0.3);  // cells of width 0.3
  REQUIRE(counts.size() == 3);
  CHECK(counts[0] == 3);
  CHECK(counts[1] == 1);
  CHECK(counts[2] == 0);  // 0.95 is leftover
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  CHECK(total == 4);
}

TEST_CASE("path_from_points validates and sorts") {
  const SamplePath path = path_from_points({0.9, 0.1, 0.5});
  CHECK(path.points == std::vector<double>{0.1, 0.5, 0.9});
  CHECK_THROWS_AS(path_from_points({1.2}), std::invalid_argument);
  CHECK_THROWS_AS(path_from_points({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(path_from_points({}), std::invalid_argument);
}
