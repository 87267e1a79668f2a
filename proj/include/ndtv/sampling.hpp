#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ndtv/core.hpp"
#include "ndtv/random.hpp"

namespace ndtv {

struct SampleResult {
  /// Sampled positions; distinct except for the with-replacement mode.
  IndexList indices;
  /// |c(R) - c(P)|.
  double centroid_dist = 0.0;
  /// Hard bound for the derandomized modes. For the randomized modes it is
  /// the root-mean-square bound sqrt(E|c(R) - c(P)|^2) instead.
  double bound = 0.0;
  /// Committed conditional expectations Z(x_1..x_t), t = 0..n, for the
  /// conditional-expectation samplers (centered coordinates). Empty otherwise.
  std::vector<double> beta_trace;
};

SampleResult sample_mean_without_replacement(const PointSet& points, std::size_t r, Rng& rng);
SampleResult sample_mean_with_replacement(const PointSet& points, std::size_t r, Rng& rng);

/// Z(x_1..x_t) = E[ |sum_i I_i p_i|^2 | I_1 = x_1 .. I_t = x_t ] for a
/// uniform r-subset, evaluated directly from the pairwise sum in O(d n^2).
/// `centered` must have centroid at the origin; t = prefix.size().
double conditional_expectation_direct(const PointSet& centered, std::size_t r,
                                      std::span<const unsigned char> prefix);

/// Incremental bookkeeping for the O(dn) conditional-expectation sampler.
///
/// Holds the prefix sums P_t, Q_t, P^x_t, Q^x_t, the carried scalars L_t and
/// the precomputed suffix scalars R_t, so that Z(x_1..x_t, x) can be
/// evaluated in O(d) for either value of x. Coordinates are taken relative
/// to `center` (the origin when empty), which should be c(P); the points
/// are never copied.
class ConditionalState {
 public:
  /// `points` must outlive the state.
  ConditionalState(const PointSet& points, std::size_t r, Vector center = {});

  std::size_t step() const { return t_; }
  std::size_t selected() const { return alpha_; }
  double beta() const { return beta_; }
  std::span<const unsigned char> assignment() const { return x_; }

  /// Z(x_1..x_t, x) for the next point, without committing.
  double evaluate(bool x) const;
  void commit(bool x);

  /// Q_n = sum |p - center|^2, the magnitude of the B and C terms; used to
  /// scale tie comparisons.
  double scale() const { return q_total_; }

 private:
  double beta_with(std::size_t t, std::size_t alpha, double qx, double l, double m) const;
  /// Point t relative to the center, cached in current_.
  std::span<const double> shifted(std::size_t t) const;

  const PointSet& pts_;
  Vector center_;
  std::size_t n_, r_;
  std::size_t t_ = 0;
  std::size_t alpha_ = 0;
  std::vector<unsigned char> x_;
  std::vector<double> q_prefix_;  // Q_t, t = 0..n
  std::vector<double> r_suffix_;  // R_t, t = 0..n
  Vector p_total_;                // P_n
  Vector p_prefix_;               // P_t
  Vector px_prefix_;              // P^x_t
  double q_total_ = 0.0;
  double qx_ = 0.0;  // Q^x_t
  double l_ = 0.0;   // L_t
  double beta_ = 0.0;
  mutable Vector current_;
  mutable std::size_t current_t_ = static_cast<std::size_t>(-1);
};

/// Conditional-expectation sampler evaluating each Z from scratch, O(d n^3).
SampleResult derand_sample_slow(const PointSet& points, std::size_t r);

/// Same greedy as derand_sample_slow in O(dn) through ConditionalState.
SampleResult derand_sample_fast(const PointSet& points, std::size_t r);

/// Repeated deterministic halving, keeping one half, until fewer than
/// 2 * target points remain. `bound` is the accumulated per-level bound in
/// units of the diameter upper bound of `points`.
SampleResult derand_sample_by_halving(const PointSet& points, std::size_t target);

}  // namespace ndtv
