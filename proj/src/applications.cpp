#include "ndtv/applications.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "ndtv/halving.hpp"
#include "ndtv/tverberg.hpp"

namespace ndtv {

namespace {

constexpr double kCollisionTol = 1e-7;
constexpr std::size_t kCaratheodoryRetries = 64;

bool next_combination(IndexList& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool covered(const PointSet& points, std::span<const std::size_t> subset,
             std::span<const Ball> balls) {
  for (const Ball& b : balls) {
    if (collides(points, subset, b)) return true;
  }
  return false;
}

}  // namespace

CenterballResult centerball(const PointSet& points, double eps, Rng& rng, bool deterministic,
                            std::optional<double> diameter) {
  CenterballResult out;
  out.certificate = deterministic ? halving_tree_partition(points, eps, diameter).certificate
                                  : tverberg_partition(points, eps, rng, diameter);
  out.ball = out.certificate.ball;
  out.depth_lower_bound = out.certificate.groups.size();
  return out;
}

std::size_t halfspace_depth_check_2d(const PointSet& points, const Ball& ball,
                                     std::size_t angles) {
  if (points.dim() != 2 || ball.center.size() != 2) {
    throw DomainError("halfspace depth probe is defined for d = 2 only");
  }
  if (angles < 8) throw DomainError("halfspace depth probe needs at least 8 directions");
  std::size_t best = points.size();
  for (std::size_t a = 0; a < angles; ++a) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(angles);
    const double ux = std::cos(theta), uy = std::sin(theta);
    const double offset = ux * ball.center[0] + uy * ball.center[1] - ball.radius;
    std::size_t count = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto p = points.point(i);
      if (ux * p[0] + uy * p[1] >= offset) ++count;
    }
    best = std::min(best, count);
  }
  return best;
}

SelectionBall selection_ball(const PointSet& points, double eps, std::optional<double> diameter) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  const PointSetStats stats = compute_stats(points);
  SelectionBall out;
  out.r = static_cast<std::size_t>(ceil_tolerant(2.0 / (eps * eps)));
  out.ball.center = stats.centroid;
  out.ball.radius = eps * (diameter ? *diameter : stats.diameter_bound);
  return out;
}

bool collides(const PointSet& points, std::span<const std::size_t> sequence, const Ball& ball) {
  const PointSet hull = points.subset(sequence);
  return dist_to_hull(ball.center, hull).distance <= ball.radius + kCollisionTol;
}

std::optional<IndexList> find_uncovered_subset(const PointSet& points, std::size_t subset_size,
                                               std::span<const Ball> balls) {
  const std::size_t n = points.size();
  if (subset_size == 0 || subset_size > n) throw DomainError("subset size out of range");
  IndexList combo(subset_size);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  do {
    if (!covered(points, combo, balls)) return combo;
  } while (next_combination(combo, n));
  return std::nullopt;
}

WeakNet weak_epsilon_net(const PointSet& points, double eps_frac, double eps_rad,
                         std::size_t n_max) {
  if (!(eps_frac > 0.0 && eps_frac < 1.0)) throw DomainError("eps_frac must lie in (0, 1)");
  if (!(eps_rad > 0.0 && eps_rad < 1.0)) throw DomainError("eps_rad must lie in (0, 1)");
  const double r_real = 2.0 / (eps_rad * eps_rad);
  if (std::abs(r_real - std::round(r_real)) > 1e-9 * r_real) {
    throw DomainError("2 / eps_rad^2 = " + std::to_string(r_real) + " is not an integer");
  }
  const std::size_t n = points.size();
  if (n > n_max) {
    throw DomainError("weak eps-net search enumerates subsets; n = " + std::to_string(n) +
                      " exceeds n_max = " + std::to_string(n_max));
  }

  WeakNet net;
  net.eps_frac = eps_frac;
  net.eps_rad = eps_rad;
  net.r = static_cast<std::size_t>(std::llround(r_real));
  net.subset_size = static_cast<std::size_t>(ceil_tolerant(eps_frac * static_cast<double>(n)));
  net.diameter = diameter_exact(points);
  net.size_cap = 2.0 * std::pow(eps_frac, -static_cast<double>(net.r));

  // Balls are only ever added, so a subset covered once stays covered and
  // the scan can resume where the previous violator was found.
  IndexList combo(net.subset_size);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  do {
    if (covered(points, combo, net.balls)) continue;
    net.balls.push_back(Ball{centroid_of(points, combo), eps_rad * net.diameter});
  } while (next_combination(combo, n));
  return net;
}

CaratheodoryResult caratheodory_approx(std::span<const double> p, const PointSet& points,
                                       std::span<const double> weights, double eps, Rng& rng,
                                       std::optional<double> diameter) {
  const std::size_t n = points.size(), d = points.dim();
  if (!(eps > 0.0)) throw DomainError("eps must be positive");
  if (weights.size() != n) throw DomainError("need one weight per point");
  if (p.size() != d) throw DomainError("target point has the wrong dimension");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("weights must sum to 1");
  IndexList all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const Vector mix = combine(points, all, weights);
  const double scale = std::max(1.0, coordinate_scale(points));
  for (std::size_t k = 0; k < d; ++k) {
    if (std::abs(mix[k] - p[k]) > 1e-9 * scale) {
      throw DomainError("target point is not the stated convex combination");
    }
  }

  CaratheodoryResult out;
  out.r = static_cast<std::size_t>(ceil_tolerant(1.0 / (2.0 * eps * eps)));
  out.bound = eps * (diameter ? *diameter : diameter_bound(points));

  std::vector<double> cumulative(n);
  std::partial_sum(weights.begin(), weights.end(), cumulative.begin());
  auto draw = [&]() -> std::size_t {
    const double u = rng.uniform() * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cumulative.begin());
    if (i >= n) i = n - 1;  // rounding at the top end
    while (weights[i] == 0.0) --i;
    return i;
  };

  double best = std::numeric_limits<double>::infinity();
  std::map<std::size_t, std::size_t> best_counts;
  for (std::size_t it = 1; it <= kCaratheodoryRetries; ++it) {
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t s = 0; s < out.r; ++s) ++counts[draw()];
    Vector q(d, 0.0);
    for (const auto& [i, c] : counts) {
      auto pi = points.point(i);
      for (std::size_t k = 0; k < d; ++k) q[k] += static_cast<double>(c) * pi[k];
    }
    for (double& v : q) v /= static_cast<double>(out.r);
    const double err = distance(q, p);
    out.iterations = it;
    if (err < best) {
      best = err;
      best_counts = std::move(counts);
    }
    if (err <= out.bound) break;
  }
  out.retry_exhausted = best > out.bound;
  for (const auto& [i, c] : best_counts) {
    out.witness.support.push_back(i);
    out.witness.weights.push_back(static_cast<double>(c) / static_cast<double>(out.r));
  }
  out.witness.point = combine(points, out.witness.support, out.witness.weights);
  out.point = out.witness.point;
  out.error = distance(out.point, p);
  return out;
}

}  // namespace ndtv
