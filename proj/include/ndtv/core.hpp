#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ndtv {

/// Raised for every violated precondition (empty input, parameter out of
/// range, malformed dimensions).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vector = std::vector<double>;
using IndexList = std::vector<std::size_t>;

/// An indexed sequence of n points in R^d, stored row-major.
///
/// Construction validates n >= 1, d >= 1 and that every coordinate is
/// finite, so downstream code can rely on those facts.
class PointSet {
 public:
  PointSet(std::size_t n, std::size_t d, std::vector<double> coords);

  static PointSet from_rows(const std::vector<Vector>& rows);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return d_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * d_, d_};
  }
  std::span<const double> coords() const { return coords_; }

  /// Copy of the points at the given positions, in the given order.
  PointSet subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<double> coords_;
};

struct Ball {
  Vector center;
  double radius = 0.0;
};

/// A convex combination of points of some group. `support` holds indices
/// into the indexing space the caller chose (global ids in certificates,
/// local ids in hull-distance results).
struct HullWitness {
  IndexList support;
  std::vector<double> weights;
  Vector point;
};

struct PointSetStats {
  Vector centroid;
  double avg_price = 0.0;
  /// 2 * max_p |p - c(P)|; an O(dn) upper bound on the diameter that is at
  /// most twice the true value.
  double diameter_bound = 0.0;
};

// Small vector kernels shared by every module.
double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(std::span<const double> a, std::span<const double> b);

Vector centroid(const PointSet& points);
Vector centroid_of(const PointSet& points, std::span<const std::size_t> indices);

/// sqrt(sum |p - c(P)|^2 / n), two-pass.
double avg_price(const PointSet& points);

/// Exact diameter by all-pairs scan, O(n^2 d). Oracle / small inputs only.
double diameter_exact(const PointSet& points);

double diameter_bound(const PointSet& points);

PointSetStats compute_stats(const PointSet& points);

/// Largest absolute coordinate of the set (0 for an all-zero set).
double coordinate_scale(const PointSet& points);

/// Convex combination sum_k weights[k] * points[support[k]].
Vector combine(const PointSet& points, std::span<const std::size_t> support,
               std::span<const double> weights);

struct HullDistance {
  double distance = 0.0;
  HullWitness witness;  // support indexes into the group
  bool converged = false;
  std::size_t iterations = 0;
};

struct HullDistanceOptions {
  /// Additive tolerance on the reported distance; <= 0 selects
  /// 1e-7 * max coordinate magnitude.
  double tol = 0.0;
  /// 0 selects 10 * |group| * ceil(1 / tol_relative), capped at 10^7.
  std::size_t max_iter = 0;
};

/// Distance from q to conv(group), computed by pairwise Frank-Wolfe on
/// min |x - q|^2 over the simplex of convex weights. The witness always
/// realizes the reported distance; `converged` is false when the duality
/// gap certificate did not reach `tol` within `max_iter` iterations.
HullDistance dist_to_hull(std::span<const double> q, const PointSet& group,
                          const HullDistanceOptions& options = {});

/// Smallest integer >= x, treating values within 1e-9 of an integer as that
/// integer (so 2 / 0.5^2 yields 8, not 9).
long long ceil_tolerant(double x);

}  // namespace ndtv
