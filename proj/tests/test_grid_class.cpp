#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "suptail/grid_class.hpp"

using namespace suptail;

TEST_CASE("build grid class") {
  CHECK(build_grid_class(0.5, true).k == 2);
  CHECK(build_grid_class(0.3, false).k == 3);  // leftover [0.9, 1)
  CHECK(build_grid_class(1.0, true).k == 1);
  CHECK(build_grid_class(1e-6, true).k == 1000000);
  CHECK_THROWS_AS(build_grid_class(0.0, true), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_class(1.5, true), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_class(1e-300, true), std::invalid_argument);
}

TEST_CASE("cell count bracket") {
  for (double sigma2 : {0.5, 0.3, 0.07, 0.013, 1.0}) {
    const GridClassSpec spec = build_grid_class(sigma2, true);
    CHECK(static_cast<double>(spec.k) * sigma2 <= 1.0);
    CHECK(1.0 < static_cast<double>(spec.k + 1) * sigma2);
  }
}

TEST_CASE("member evaluation") {
  const GridClassSpec centered = build_grid_class(0.5, true);
  CHECK(evaluate_member(centered, 1, 0.25) == 0.5);
  CHECK(evaluate_member(centered, 1, 0.75) == -0.5);
  const GridClassSpec plain = build_grid_class(0.5, false);
  CHECK(evaluate_member(plain, 2, 0.5) == 1.0);  // cells are left-closed
  CHECK(evaluate_member(plain, 1, 0.5) == 0.0);
  CHECK_THROWS_AS(evaluate_member(plain, 0, 0.5), std::out_of_range);
  CHECK_THROWS_AS(evaluate_member(plain, 3, 0.5), std::out_of_range);
}

TEST_CASE("member moments") {
  const GridClassSpec c25 = build_grid_class(0.25, true);
  const Moments m = member_moments(c25, 2);
  CHECK(m.mean == 0.0);
  CHECK(m.second == doctest::Approx(0.1875).epsilon(1e-15));
  const GridClassSpec degenerate = build_grid_class(1.0, true);
  const Moments m1 = member_moments(degenerate, 1);
  CHECK(m1.mean == 0.0);
  CHECK(m1.second == 0.0);
  const GridClassSpec plain = build_grid_class(0.5, false);
  const Moments mp = member_moments(plain, 1);
  CHECK(mp.mean == 0.5);
  CHECK(mp.second == 0.5);
}

TEST_CASE("l1 distance through a measure") {
  const GridClassSpec spec = build_grid_class(0.25, true);
  const std::vector<double> uniform = {0.25, 0.25, 0.25, 0.25, 0.0};
  CHECK(l1_distance(spec, 1, 3, uniform) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(l1_distance(spec, 2, 2, uniform) == 0.0);
  const std::vector<double> concentrated = {1.0, 0.0, 0.0, 0.0, 0.0};
  CHECK(l1_distance(spec, 1, 4, concentrated) == 1.0);
  const std::vector<double> bad = {0.3, 0.3, 0.3, 0.3, 0.0};
  CHECK_THROWS_AS(l1_distance(spec, 1, 2, bad), std::invalid_argument);
  const std::vector<double> short_nu = {0.5, 0.5};
  CHECK_THROWS_AS(l1_distance(spec, 1, 2, short_nu), std::invalid_argument);
}

TEST_CASE("greedy cover") {
  const GridClassSpec spec = build_grid_class(0.25, true);
  const std::vector<double> uniform = {0.25, 0.25, 0.25, 0.25, 0.0};
  // pairwise distance 0.5 > 0.1: every member its own center
  const CoverResult tight = greedy_cover(spec, uniform, 0.1);
  CHECK(tight.m == 4);
  // any single center covers all when epsilon exceeds the diameter
  CHECK(greedy_cover(spec, uniform, 1.5).m == 1);
  const GridClassSpec single = build_grid_class(1.0, true);
  const std::vector<double> one = {1.0, 0.0};
  CHECK(greedy_cover(single, one, 0.5).m == 1);
}

TEST_CASE("greedy cover satisfies strict covering") {
  const GridClassSpec spec = build_grid_class(0.2, true);
  const std::vector<double> nu = {0.4, 0.1, 0.1, 0.15, 0.25, 0.0};
  for (double eps : {0.05, 0.21, 0.5, 1.1}) {
    const CoverResult cover = greedy_cover(spec, nu, eps);
    for (std::uint64_t j = 1; j <= spec.k; ++j) {
      double best = 1e300;
      for (std::uint64_t c : cover.centers) {
        best = std::min(best, l1_distance(spec, j, c, nu));
      }
      CHECK(best < eps);
    }
  }
}

TEST_CASE("dense parameter fit") {
  const GridClassSpec single = build_grid_class(1.0, true);
  const std::vector<std::vector<double>> mono = {{1.0, 0.0}};
  const std::vector<double> grid = {0.9, 0.5, 0.1};
  const DenseFit unit = fit_dense_parameters(single, grid, mono);
  CHECK(unit.d_hat == 1.0);
  CHECK(unit.l_hat == 1.0);

  const GridClassSpec spec = build_grid_class(0.25, true);
  const std::vector<std::vector<double>> measures = {
      {0.25, 0.25, 0.25, 0.25, 0.0},
      {0.7, 0.1, 0.1, 0.1, 0.0},
  };
  const DenseFit fit = fit_dense_parameters(spec, grid, measures);
  CHECK(fit.l_hat >= 1.0);
  CHECK(fit.d_hat >= 1.0);
  // the fitted envelope really covers the observed cover sizes
  for (double eps : grid) {
    std::uint64_t worst = 0;
    for (const auto& nu : measures) {
      worst = std::max(worst, greedy_cover(spec, nu, eps).m);
    }
    CHECK(static_cast<double>(worst) <=
          fit.d_hat * std::pow(eps, -fit.l_hat) * (1.0 + 1e-12));
  }

  CHECK_THROWS_AS(fit_dense_parameters(spec, {}, measures), std::invalid_argument);
  const std::vector<double> degenerate = {0.5, 0.5};
  CHECK_THROWS_AS(fit_dense_parameters(spec, degenerate, measures),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_dense_parameters(spec, grid, {}), std::invalid_argument);
}
