#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ndtv/certificate.hpp"
#include "ndtv/core.hpp"
#include "ndtv/random.hpp"

namespace ndtv {

/// Split of U = (u_1..u_2n) taking one point of each consecutive pair into
/// `first` and the other into `second`. sign +1 sends u_{2i-1} to `first`.
struct HalvingResult {
  IndexList first;
  IndexList second;
  std::vector<signed char> signs;
  double centroid_dist = 0.0;  // |c(first) - c(second)|
  std::size_t rounds = 1;
  /// Acceptance threshold of the retrying variant, 0 otherwise.
  double threshold = 0.0;
};

/// Greedy state of the deterministic halving over a list of positions.
struct HalvingState {
  std::vector<signed char> signs;
  Vector running_sum;                  // V_n = sum_i x_i v_i
  std::vector<double> decision_values; // D_t before each choice
};

HalvingResult random_halving(const PointSet& u, Rng& rng);

/// Retries random_halving until |c(P) - c(Q)| <= (1 + xi) diam / sqrt(n).
/// Without `diameter`, uses the exact diameter for |U| <= 4096 and the
/// 2 max |u - c(U)| upper bound otherwise.
HalvingResult random_halving_retry(const PointSet& u, double xi, Rng& rng,
                                   std::optional<double> diameter = std::nullopt);

HalvingResult derand_halving(const PointSet& u);

/// Deterministic halving of the points at `positions` (even length), pairing
/// positions[2i] with positions[2i+1].
HalvingState derand_halving_state(const PointSet& points, std::span<const std::size_t> positions);

struct HalvingTreeTrace {
  std::size_t levels = 0;
  std::size_t trimmed_size = 0;        // 2^s
  double diameter_bound = 0.0;         // diameter value the bounds use
  std::vector<double> per_level_bound; // l_i = D / (2 sqrt(2^s / 2^i))
  std::vector<double> realized_level_max;  // max |c(child) - c(parent)| per level
  double cumulative_bound = 0.0;       // L_t
  std::vector<IndexList> leaf_groups;  // before round-robin distribution
  double trimmed_centroid_offset = 0.0;  // |c(P') - c(P)|
};

struct TreePartition {
  TverbergCertificate certificate;
  HalvingTreeTrace trace;
};

/// Deterministic partition by recursive halving of the largest power-of-two
/// prefix, stopping at the deepest level whose sets still hold at least
/// 3.2 / eps^2 points; remaining points are dealt round-robin.
TreePartition halving_tree_partition(const PointSet& points, double eps,
                                     std::optional<double> diameter = std::nullopt);

}  // namespace ndtv
