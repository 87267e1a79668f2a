#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ndtv/certificate.hpp"
#include "ndtv/core.hpp"
#include "ndtv/random.hpp"

namespace ndtv {

/// How bad groups are folded into good ones after an accepted round.
enum class MergeMode {
  pairs,    // accept iff bad < t/2, each good group absorbs at most one bad group
  triples,  // accept iff bad < 2t/3, each good group absorbs at most two
};

struct RandomPartitionTrace {
  double zeta = 0.0;            // 2 (1 + eps^2 / 8)
  std::size_t group_size = 0;   // M = ceil(zeta / eps^2)
  std::size_t num_groups = 0;   // t = floor(n / M)
  std::size_t bad_count = 0;    // bad groups in the accepted round
  double threshold = 0.0;       // t/2 or 2t/3
  std::size_t rounds_used = 0;
  double diameter_bound = 0.0;  // 2 max |p - c(P)|, a by-product of the setup
};

/// One random cut of P into t groups of size M or M+1 with the good/bad
/// classification; the unit the retry loop repeats.
struct PartitionRound {
  std::vector<IndexList> groups;
  std::vector<bool> good;
  std::vector<double> centroids;  // t x d, row g is c(groups[g])
  std::size_t bad_count = 0;
  bool accepted = false;
};

/// Shared inputs of a round, computed once per call.
struct RoundSetup {
  double eps = 0.0;
  MergeMode mode = MergeMode::pairs;
  Vector center;    // c(P)
  double sigma = 0.0;
  double diameter_bound = 0.0;
  double zeta = 0.0;
  std::size_t group_size = 0;
  std::size_t num_groups = 0;
  double threshold = 0.0;
};

/// Validates eps in (0,1) and n >= 27 / eps^4, and derives M, t, threshold.
RoundSetup prepare_round(const PointSet& points, double eps, MergeMode mode);
PartitionRound run_round(const PointSet& points, const RoundSetup& setup, Rng& rng);

struct RandomPartition {
  TverbergCertificate certificate;
  RandomPartitionTrace trace;
};

/// Randomized partition with alteration: ball B(c(P), eps * avgp(P)),
/// |P_i| <= 4/eps^2 + 9/2 (pairs) or 6/eps^2 + 7 (triples).
RandomPartition random_tverberg_core(const PointSet& points, double eps, Rng& rng,
                                     MergeMode mode = MergeMode::pairs);

/// Diameter-scaled wrapper: runs the core at sqrt(2) eps, so the ball has
/// radius sqrt(2) eps avgp(P) <= eps diam(P). The certificate states
/// radius eps * D with D the supplied diameter or the 2 max |p - c| bound.
/// eps in (0, 1/sqrt 2), n >= 27 / (sqrt(2) eps)^4.
TverbergCertificate tverberg_partition(const PointSet& points, double eps, Rng& rng,
                                       std::optional<double> diameter = std::nullopt);

/// O(nd) expected-time variant merging up to three sets per good group.
TverbergCertificate tverberg_fast(const PointSet& points, double eps, Rng& rng);

struct CheckOutcome {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  bool passed = true;
  std::vector<CheckOutcome> checks;

  const CheckOutcome* first_failure() const;
};

/// Independent O(dn) audit of a certificate:
///   partition  groups are disjoint and cover 0..n-1
///   witnesses  each witness is a convex combination of its own group
///   ball       each witness lies within radius + tol of the center
///   claims     max group size and group count meet the stated claims
VerificationReport verify_certificate(const PointSet& points, const TverbergCertificate& cert,
                                      double tol = 1e-7);

}  // namespace ndtv
