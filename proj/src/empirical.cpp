#include "suptail/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "suptail/rng.hpp"

namespace suptail {

namespace {

void require_sigma2(double sigma2) {
  if (!(sigma2 > 0.0) || !(sigma2 <= 1.0) || !std::isfinite(sigma2)) {
    throw std::invalid_argument("sigma2 must lie in (0, 1]");
  }
}

void require_x(double x) {
  if (!(x > 0.0) || !(x <= 1.0)) throw std::invalid_argument("x must lie in (0, 1]");
}

}  // namespace

SamplePath sample_uniform(std::uint64_t n, std::uint64_t key) {
  if (n == 0) throw std::invalid_argument("sample_uniform: n must be >= 1");
  SamplePath path;
  path.seed = key;
  path.points.resize(n);
  CounterRng rng(key);
  for (auto& p : path.points) p = rng.next_unit();
  std::sort(path.points.begin(), path.points.end());
  return path;
}

SamplePath path_from_points(std::vector<double> points, std::uint64_t seed) {
  if (points.empty()) throw std::invalid_argument("path_from_points: empty sample");
  for (double p : points) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
      throw std::invalid_argument("path_from_points: points must lie in [0,1]");
    }
  }
  std::sort(points.begin(), points.end());
  SamplePath path;
  path.points = std::move(points);
  path.seed = seed;
  return path;
}

double empirical_cdf(const SamplePath& path, double x) {
  require_x(x);
  const auto it = std::lower_bound(path.points.begin(), path.points.end(), x);
  return static_cast<double>(it - path.points.begin()) /
         static_cast<double>(path.n());
}

double normalized_process(const SamplePath& path, double x) {
  require_x(x);
  return std::sqrt(static_cast<double>(path.n())) * (empirical_cdf(path, x) - x);
}

SupResult sup_via_increments(const SamplePath& path, double sigma2) {
  require_sigma2(sigma2);
  const double k = std::floor(1.0 / sigma2);
  const double nd = static_cast<double>(path.n());
  const double sqrt_n = std::sqrt(nd);
  const double drift = nd * sigma2;  // expected count per cell

  SupResult best;
  best.value = -1.0;
  best.cell = 0.0;

  // Walk occupied cells in index order; sorted input makes them runs.
  double next_free = 0.0;   // lowest cell index (0-based) not yet seen
  double lowest_empty = -1.0;
  std::size_t i = 0;
  const std::size_t n = path.points.size();
  while (i < n) {
    const double cell = std::floor(path.points[i] / sigma2);
    if (cell >= k) break;  // leftover interval; all later points too
    std::size_t j = i;
    while (j < n && std::floor(path.points[j] / sigma2) == cell) ++j;
    const double count = static_cast<double>(j - i);
    const double value = std::fabs(count - drift) / sqrt_n;
    if (value > best.value) {
      best.value = value;
      best.cell = cell + 1.0;
    }
    if (lowest_empty < 0.0 && cell > next_free) lowest_empty = next_free;
    next_free = cell + 1.0;
    i = j;
  }
  if (lowest_empty < 0.0 && next_free < k) lowest_empty = next_free;

  if (lowest_empty >= 0.0) {
    const double empty_value = drift / sqrt_n;
    if (empty_value > best.value ||
        (empty_value == best.value && lowest_empty + 1.0 < best.cell)) {
      best.value = empty_value;
      best.cell = lowest_empty + 1.0;
    }
  }
  if (best.value < 0.0) {  // k cells all occupied is impossible here: n < k
    best.value = 0.0;
    best.cell = 1.0;
  }
  return best;
}

double sup_direct(const SamplePath& path, const GridClassSpec& spec) {
  if (!spec.centered) {
    throw std::invalid_argument("sup_direct: spec must be centered");
  }
  const double sqrt_n = std::sqrt(static_cast<double>(path.n()));
  double best = 0.0;
  for (std::uint64_t j = 1; j <= spec.k; ++j) {
    // Extended-precision accumulator: plain double summation drifts past
    // 1e-12 against the count identity once n * sigma2 is large.
    long double sum = 0.0L;
    for (double x : path.points) sum += evaluate_member(spec, j, x);
    best = std::max(best, static_cast<double>(std::fabs(static_cast<double>(sum))) / sqrt_n);
  }
  return best;
}

namespace {

struct Breakpoint {
  double y;      // location
  double at;     // G at y (pre-jump value; attained)
  double after;  // G just above y (post-jump limit)
};

}  // namespace

double modulus_statistic(const SamplePath& path, double delta) {
  if (!(delta > 0.0) || !(delta <= 1.0)) {
    throw std::invalid_argument("delta must lie in (0, 1]");
  }
  const auto& pts = path.points;
  const double nd = static_cast<double>(path.n());
  const double sq = std::sqrt(nd);

  // Unique sample values with cumulative counts.
  std::vector<Breakpoint> bp;
  bp.reserve(pts.size() + 1);
  bp.push_back({0.0, 0.0, 0.0});  // G(0) = 0; no mass at 0 unless a point sits there
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    while (j < pts.size() && pts[j] == pts[i]) ++j;
    const double y = pts[i];
    const double below = static_cast<double>(i);
    const double through = static_cast<double>(j);
    if (y == 0.0) {
      bp[0].after = through / sq;  // jump at the origin itself
    } else {
      bp.push_back({y, below / sq - sq * y, through / sq - sq * y});
    }
    i = j;
  }
  const double count_below_one =
      static_cast<double>(std::lower_bound(pts.begin(), pts.end(), 1.0) - pts.begin());
  const double g_at_one = count_below_one / sq - sq;

  double result = 0.0;

  // Count-heavy direction: value G(y_j^+) - G(y_i) over pairs with
  // y_j - y_i < delta (strict), s-candidates include the origin.
  {
    std::deque<std::size_t> window;  // indices into bp, G-at values increasing
    std::size_t next_in = 0;
    for (std::size_t a = 0; a < bp.size(); ++a) {
      if (bp[a].y >= 1.0) break;  // no room above y for the post-jump limit
      while (next_in <= a) {
        while (!window.empty() && bp[window.back()].at >= bp[next_in].at) {
          window.pop_back();
        }
        window.push_back(next_in);
        ++next_in;
      }
      while (!window.empty() && bp[window.front()].y <= bp[a].y - delta) {
        window.pop_front();
      }
      if (!window.empty()) {
        result = std::max(result, bp[a].after - bp[window.front()].at);
      }
    }
  }

  // Drift-heavy direction: value G(y_i^+) - G(t) with t at a later
  // breakpoint (closed window), at the domain end, or at the window limit
  // y_i + delta inside a gap.
  {
    // Pairs (post-jump start, pre-jump end), y_b - y_a <= delta.
    std::deque<std::size_t> window;  // "after" values decreasing
    std::size_t next_in = 0;
    auto push_up_to = [&](double y_limit) {
      while (next_in < bp.size() && bp[next_in].y <= y_limit) {
        if (bp[next_in].y < 1.0) {
          while (!window.empty() && bp[window.back()].after <= bp[next_in].after) {
            window.pop_back();
          }
          window.push_back(next_in);
        }
        ++next_in;
      }
    };
    auto best_start = [&](double y_end) -> double {
      push_up_to(y_end);
      while (!window.empty() && bp[window.front()].y < y_end - delta) {
        window.pop_front();
      }
      if (window.empty()) return -1e300;
      return bp[window.front()].after;
    };
    for (std::size_t b = 1; b < bp.size(); ++b) {
      result = std::max(result, best_start(bp[b].y) - bp[b].at);
    }
    result = std::max(result, best_start(1.0) - g_at_one);

    // Window-limit candidates: t = y_a + delta in the interior.
    for (const auto& a : bp) {
      if (a.y >= 1.0) continue;
      const double w = a.y + delta;
      if (w >= 1.0) continue;  // capped case equals the pair with the end value
      const double count_le =
          static_cast<double>(std::upper_bound(pts.begin(), pts.end(), w) - pts.begin());
      const double g_after_w = count_le / sq - sq * w;
      result = std::max(result, a.after - g_after_w);
    }
  }

  return result;
}

std::vector<std::uint64_t> cell_counts_sorted(std::span<const double> sorted_points,
                                              double sigma2) {
  require_sigma2(sigma2);
  const double kd = std::floor(1.0 / sigma2);
  if (kd > 1e8) {
    throw std::invalid_argument("cell_counts_sorted: too many cells to materialize");
  }
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(kd), 0);
  for (double x : sorted_points) {
    const double cell = std::floor(x / sigma2);
    if (cell >= kd) break;
    ++counts[static_cast<std::size_t>(cell)];
  }
  return counts;
}

}  // namespace suptail
