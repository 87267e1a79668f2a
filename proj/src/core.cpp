#include "ndtv/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ndtv {

PointSet::PointSet(std::size_t n, std::size_t d, std::vector<double> coords)
    : n_(n), d_(d), coords_(std::move(coords)) {
  if (n_ == 0) throw DomainError("point set must contain at least one point");
  if (d_ == 0) throw DomainError("dimension must be at least 1");
  if (coords_.size() != n_ * d_) {
    throw DomainError("coordinate buffer has " + std::to_string(coords_.size()) +
                      " values, expected n*d = " + std::to_string(n_ * d_));
  }
  for (double v : coords_) {
    if (!std::isfinite(v)) throw DomainError("point coordinates must be finite");
  }
}

PointSet PointSet::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) throw DomainError("point set must contain at least one point");
  const std::size_t d = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw DomainError("all points must share one dimension");
    coords.insert(coords.end(), row.begin(), row.end());
  }
  return PointSet(rows.size(), d, std::move(coords));
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
  std::vector<double> coords;
  coords.reserve(indices.size() * d_);
  for (std::size_t i : indices) {
    if (i >= n_) throw DomainError("subset index out of range");
    auto p = point(i);
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(indices.size(), d_, std::move(coords));
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double t = a[k] - b[k];
    s += t * t;
  }
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_distance(a, b));
}

Vector centroid(const PointSet& points) {
  const std::size_t n = points.size(), d = points.dim();
  Vector c(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < d; ++k) c[k] += p[k];
  }
  for (double& v : c) v /= static_cast<double>(n);
  return c;
}

Vector centroid_of(const PointSet& points, std::span<const std::size_t> indices) {
  if (indices.empty()) throw DomainError("centroid of an empty index set");
  const std::size_t d = points.dim();
  Vector c(d, 0.0);
  for (std::size_t i : indices) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < d; ++k) c[k] += p[k];
  }
  for (double& v : c) v /= static_cast<double>(indices.size());
  return c;
}

namespace {

double avg_price_about(const PointSet& points, std::span<const double> c) {
  double s = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) s += squared_distance(points.point(i), c);
  return std::sqrt(s / static_cast<double>(points.size()));
}

double diameter_bound_about(const PointSet& points, std::span<const double> c) {
  double m = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    m = std::max(m, squared_distance(points.point(i), c));
  }
  return 2.0 * std::sqrt(m);
}

}  // namespace

double avg_price(const PointSet& points) {
  const Vector c = centroid(points);
  return avg_price_about(points, c);
}

double diameter_exact(const PointSet& points) {
  double best = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      best = std::max(best, squared_distance(points.point(i), points.point(j)));
    }
  }
  return std::sqrt(best);
}

double diameter_bound(const PointSet& points) {
  const Vector c = centroid(points);
  return diameter_bound_about(points, c);
}

PointSetStats compute_stats(const PointSet& points) {
  PointSetStats s;
  s.centroid = centroid(points);
  double sum = 0.0, worst = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double q = squared_distance(points.point(i), s.centroid);
    sum += q;
    worst = std::max(worst, q);
  }
  s.avg_price = std::sqrt(sum / static_cast<double>(points.size()));
  s.diameter_bound = 2.0 * std::sqrt(worst);
  return s;
}

double coordinate_scale(const PointSet& points) {
  double m = 0.0;
  for (double v : points.coords()) m = std::max(m, std::abs(v));
  return m;
}

Vector combine(const PointSet& points, std::span<const std::size_t> support,
               std::span<const double> weights) {
  if (support.size() != weights.size()) throw DomainError("support/weights length mismatch");
  Vector x(points.dim(), 0.0);
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (support[k] >= points.size()) throw DomainError("witness index out of range");
    auto p = points.point(support[k]);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += weights[k] * p[j];
  }
  return x;
}

HullDistance dist_to_hull(std::span<const double> q, const PointSet& group,
                          const HullDistanceOptions& options) {
  const std::size_t m = group.size(), d = group.dim();
  if (q.size() != d) throw DomainError("query dimension does not match group dimension");

  double tol = options.tol;
  if (tol <= 0.0) {
    double scale = coordinate_scale(group);
    for (double v : q) scale = std::max(scale, std::abs(v));
    tol = 1e-7 * std::max(scale, std::numeric_limits<double>::min());
  }
  std::size_t max_iter = options.max_iter;
  if (max_iter == 0) max_iter = std::min<std::size_t>(10 * m * 10'000'000ULL, 10'000'000ULL);

  // Start at the vertex nearest to q.
  std::vector<double> w(m, 0.0);
  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const double s = squared_distance(group.point(j), q);
    if (s < best) {
      best = s;
      start = j;
    }
  }
  w[start] = 1.0;
  Vector x(group.point(start).begin(), group.point(start).end());
  Vector grad(d);
  std::vector<double> proj(m);

  HullDistance out;
  std::size_t it = 0;
  for (; it < max_iter; ++it) {
    for (std::size_t k = 0; k < d; ++k) grad[k] = x[k] - q[k];
    const double gnorm2 = dot(grad, grad);
    const double gnorm = std::sqrt(gnorm2);
    if (gnorm <= tol) {
      out.converged = true;
      break;
    }
    std::size_t s = 0, v = m;
    double smin = std::numeric_limits<double>::infinity();
    double vmax = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      proj[j] = dot(grad, group.point(j));
      if (proj[j] < smin) {
        smin = proj[j];
        s = j;
      }
      if (w[j] > 0.0 && proj[j] > vmax) {
        vmax = proj[j];
        v = j;
      }
    }
    const double gap = dot(grad, x) - smin;
    // |x - q| - dist* <= min(2 gap / |x - q|, sqrt(2 gap)).
    if (gap <= 0.0 || std::min(2.0 * gap / gnorm, std::sqrt(2.0 * gap)) <= tol) {
      out.converged = true;
      break;
    }
    if (v == s) {
      out.converged = true;
      break;
    }
    auto ps = group.point(s);
    auto pv = group.point(v);
    double dir2 = 0.0, slope = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      const double dk = ps[k] - pv[k];
      dir2 += dk * dk;
      slope += grad[k] * dk;
    }
    if (dir2 == 0.0 || slope >= 0.0) {
      // s and v coincide geometrically; move the weight without changing x.
      w[s] += w[v];
      w[v] = 0.0;
      continue;
    }
    double step = -slope / dir2;
    if (step >= w[v]) {
      step = w[v];
      w[s] += w[v];
      w[v] = 0.0;
    } else {
      w[s] += step;
      w[v] -= step;
    }
    for (std::size_t k = 0; k < d; ++k) x[k] += step * (ps[k] - pv[k]);
    if ((it + 1) % 1024 == 0) {
      // Resynchronize the iterate with its weights.
      std::fill(x.begin(), x.end(), 0.0);
      for (std::size_t j = 0; j < m; ++j) {
        if (w[j] == 0.0) continue;
        auto p = group.point(j);
        for (std::size_t k = 0; k < d; ++k) x[k] += w[j] * p[k];
      }
    }
  }
  out.iterations = it;

  double total = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    if (w[j] > 0.0) {
      out.witness.support.push_back(j);
      out.witness.weights.push_back(w[j]);
      total += w[j];
    }
  }
  for (double& wk : out.witness.weights) wk /= total;
  out.witness.point = combine(group, out.witness.support, out.witness.weights);
  out.distance = distance(out.witness.point, q);
  return out;
}

long long ceil_tolerant(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<long long>(r);
  return static_cast<long long>(std::ceil(x));
}

}  // namespace ndtv
