#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ndtv/certificate.hpp"
#include "ndtv/core.hpp"
#include "ndtv/random.hpp"

namespace ndtv {

struct CenterballResult {
  Ball ball;
  /// Every closed halfspace containing `ball` holds at least this many
  /// points: one per group of `certificate`.
  std::size_t depth_lower_bound = 0;
  TverbergCertificate certificate;
};

/// Centerball of radius eps * D backed by a partition certificate; the
/// randomized backend is tverberg_partition, the deterministic one
/// halving_tree_partition.
CenterballResult centerball(const PointSet& points, double eps, Rng& rng, bool deterministic,
                            std::optional<double> diameter = std::nullopt);

/// min over `angles` evenly spaced unit directions u of
/// |{p : <u, p> >= <u, center> - radius}|, the smallest count among the
/// sampled halfspaces that contain the ball. d must be 2.
std::size_t halfspace_depth_check_2d(const PointSet& points, const Ball& ball, std::size_t angles);

struct SelectionBall {
  Ball ball;
  std::size_t r = 0;  // ceil(2 / eps^2)
};

/// B(c(P), eps * D); a uniform r-sequence from P hits it with probability
/// at least 1/2.
SelectionBall selection_ball(const PointSet& points, double eps,
                             std::optional<double> diameter = std::nullopt);

/// True when conv(sequence) meets `ball` (hull distance <= radius + 1e-7).
bool collides(const PointSet& points, std::span<const std::size_t> sequence, const Ball& ball);

struct WeakNet {
  std::vector<Ball> balls;
  double eps_frac = 0.0;
  double eps_rad = 0.0;
  std::size_t r = 0;            // 2 / eps_rad^2
  std::size_t subset_size = 0;  // ceil(eps_frac * n)
  double diameter = 0.0;        // exact diam(P)
  double size_cap = 0.0;        // 2 eps_frac^-r
};

/// Greedy weak eps-net at desk scale: while some ceil(eps_frac n)-subset has
/// a hull missing every ball, add B(c(Q), eps_rad diam(P)) for the
/// lexicographically first such Q. Exponential in n; n <= n_max.
WeakNet weak_epsilon_net(const PointSet& points, double eps_frac, double eps_rad,
                         std::size_t n_max = 24);

/// Index of the first subset (lexicographic order) of the given size whose
/// hull misses every ball, or nullopt if the net covers all of them.
std::optional<IndexList> find_uncovered_subset(const PointSet& points, std::size_t subset_size,
                                               std::span<const Ball> balls);

struct CaratheodoryResult {
  Vector point;
  HullWitness witness;  // global indices; weights are multiples of 1/r
  double error = 0.0;   // |p - q|
  double bound = 0.0;   // eps * D
  std::size_t r = 0;    // ceil(1 / (2 eps^2))
  std::size_t iterations = 0;
  /// Set when 64 draws all missed the bound; `point` is then the best draw.
  bool retry_exhausted = false;
};

/// Sparse approximation of p = sum_i weights_i p_i by the average of r
/// weighted draws, redrawn until |p - q| <= eps * D.
CaratheodoryResult caratheodory_approx(std::span<const double> p, const PointSet& points,
                                       std::span<const double> weights, double eps, Rng& rng,
                                       std::optional<double> diameter = std::nullopt);

}  // namespace ndtv
