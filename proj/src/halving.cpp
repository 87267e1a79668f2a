#include "ndtv/halving.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

namespace ndtv {

namespace {

void require_even(const PointSet& u) {
  if (u.size() % 2 != 0) {
    throw DomainError("halving needs an even number of points, got " + std::to_string(u.size()));
  }
}

HalvingResult split_by_signs(const PointSet& u, std::span<const signed char> signs) {
  HalvingResult out;
  out.signs.assign(signs.begin(), signs.end());
  out.first.reserve(signs.size());
  out.second.reserve(signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) {
    const std::size_t a = 2 * i, b = 2 * i + 1;
    if (signs[i] > 0) {
      out.first.push_back(a);
      out.second.push_back(b);
    } else {
      out.first.push_back(b);
      out.second.push_back(a);
    }
  }
  out.centroid_dist = distance(centroid_of(u, out.first), centroid_of(u, out.second));
  return out;
}

// One greedy step: D = scale <V, a - b>, x = +1 iff D <= 0, then V += x (a - b).
inline signed char pair_step(double* sum, const double* a, const double* b, std::size_t d,
                             double scale, double& decision) {
  double s = 0.0;
  for (std::size_t k = 0; k < d; ++k) s += sum[k] * (a[k] - b[k]);
  decision = scale * s;
  const signed char x = decision <= 0.0 ? 1 : -1;
  for (std::size_t k = 0; k < d; ++k) sum[k] += x * (a[k] - b[k]);
  return x;
}

double pair_scale(std::size_t pairs) {
  return pairs > 0 ? 2.0 / (static_cast<double>(pairs) * pairs) : 0.0;
}

// c(P), c(first `count` points) and, when wanted, 2 max |p - c(P)| in two
// sweeps.
struct TreeStats {
  Vector centroid;
  Vector prefix_centroid;
  double diameter_bound = 0.0;
};

TreeStats tree_stats(const PointSet& points, std::size_t count, bool want_bound) {
  const std::size_t n = points.size(), d = points.dim();
  TreeStats t;
  t.centroid.assign(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == count) t.prefix_centroid = t.centroid;
    auto p = points.point(i);
    for (std::size_t k = 0; k < d; ++k) t.centroid[k] += p[k];
  }
  if (count == n) t.prefix_centroid = t.centroid;
  for (double& v : t.prefix_centroid) v /= static_cast<double>(count);
  for (double& v : t.centroid) v /= static_cast<double>(n);
  if (want_bound) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, squared_distance(points.point(i), t.centroid));
    }
    t.diameter_bound = 2.0 * std::sqrt(worst);
  }
  return t;
}

}  // namespace

HalvingResult random_halving(const PointSet& u, Rng& rng) {
  require_even(u);
  std::vector<signed char> signs(u.size() / 2);
  for (auto& s : signs) s = rng.coin() ? 1 : -1;
  return split_by_signs(u, signs);
}

HalvingResult random_halving_retry(const PointSet& u, double xi, Rng& rng,
                                   std::optional<double> diameter) {
  require_even(u);
  if (!(xi > 0.0 && xi < 1.0)) throw DomainError("xi must lie in (0, 1)");
  double diam;
  if (diameter) {
    if (!(*diameter >= 0.0)) throw DomainError("diameter bound must be nonnegative");
    diam = *diameter;
  } else {
    diam = u.size() <= 4096 ? diameter_exact(u) : diameter_bound(u);
  }
  const double half = static_cast<double>(u.size() / 2);
  const double threshold = (1.0 + xi) * diam / std::sqrt(half);
  for (std::size_t round = 1;; ++round) {
    HalvingResult res = random_halving(u, rng);
    if (res.centroid_dist <= threshold) {
      res.rounds = round;
      res.threshold = threshold;
      return res;
    }
  }
}

HalvingState derand_halving_state(const PointSet& points, std::span<const std::size_t> positions) {
  if (positions.size() % 2 != 0) throw DomainError("halving needs an even number of points");
  const std::size_t pairs = positions.size() / 2;
  const double scale = pair_scale(pairs);
  HalvingState st;
  st.signs.resize(pairs);
  st.decision_values.resize(pairs);
  st.running_sum.assign(points.dim(), 0.0);
  for (std::size_t i = 0; i < pairs; ++i) {
    st.signs[i] = pair_step(st.running_sum.data(), points.point(positions[2 * i]).data(),
                            points.point(positions[2 * i + 1]).data(), points.dim(), scale,
                            st.decision_values[i]);
  }
  return st;
}

HalvingResult derand_halving(const PointSet& u) {
  require_even(u);
  IndexList all(u.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const HalvingState st = derand_halving_state(u, all);
  return split_by_signs(u, st.signs);
}

TreePartition halving_tree_partition(const PointSet& points, double eps,
                                     std::optional<double> diameter) {
  if (!(eps > 0.0 && eps <= 0.25)) throw DomainError("eps must lie in (0, 1/4]");
  const std::size_t n = points.size();
  const double min_leaf = 3.2 / (eps * eps);

  std::size_t trimmed = 1;
  while (trimmed * 2 <= n) trimmed *= 2;
  if (static_cast<double>(trimmed / 2) < min_leaf) {
    throw DomainError("n = " + std::to_string(n) + " too small for eps = " + std::to_string(eps) +
                      ": no halving level keeps sets of size >= 3.2/eps^2 (need n >= " +
                      std::to_string(2 * static_cast<std::size_t>(std::ceil(min_leaf))) +
                      " rounded up to a power of two)");
  }

  const TreeStats stats = tree_stats(points, trimmed, !diameter);
  const RadiusBasis basis = diameter ? RadiusBasis::diameter : RadiusBasis::diameter_bound;
  const double diam = diameter ? *diameter : stats.diameter_bound;
  if (!(diam >= 0.0)) throw DomainError("diameter bound must be nonnegative");

  const std::size_t d = points.dim();
  const Vector& root_center = stats.prefix_centroid;

  TreePartition out;
  HalvingTreeTrace& trace = out.trace;
  trace.trimmed_size = trimmed;
  trace.diameter_bound = diam;
  trace.trimmed_centroid_offset = distance(root_center, stats.centroid);

  std::size_t levels = 0, node_size = trimmed;
  while (static_cast<double>(node_size / 2) >= min_leaf) {
    node_size /= 2;
    ++levels;
  }

  // Every node consumes its rows in order and pairs them as they arrive, so
  // the whole tree runs as one streaming cascade over P: a row enters at the
  // root, waits at a node until its partner arrives, and the pair's two picks
  // move on to the children. Node k (root 1) has children 2k and 2k+1; the
  // leaves are nodes 2^levels .. 2^(levels+1) - 1, in the same order a
  // level-by-level split would produce them.
  const std::size_t leaves = std::size_t{1} << levels;
  std::vector<double> sums(leaves * d, 0.0);  // V per internal node, slot k
  std::vector<std::size_t> pending(leaves, SIZE_MAX);
  std::vector<double> realized(levels, 0.0);
  std::vector<IndexList> level(leaves);
  std::vector<double> leaf_sums(leaves * d, 0.0);
  for (auto& leaf : level) leaf.reserve(node_size);
  std::vector<double> scale(levels);
  for (std::size_t k = 0; k < levels; ++k) scale[k] = pair_scale((trimmed >> k) / 2);

  auto push = [&](auto&& self, std::size_t node, std::size_t depth, std::size_t i) -> void {
    if (depth == levels) {
      level[node - leaves].push_back(i);
      double* sum = leaf_sums.data() + (node - leaves) * d;
      auto p = points.point(i);
      for (std::size_t k = 0; k < d; ++k) sum[k] += p[k];
      return;
    }
    if (pending[node] == SIZE_MAX) {
      pending[node] = i;
      return;
    }
    const std::size_t first = pending[node];
    pending[node] = SIZE_MAX;
    double decision;
    const signed char x = pair_step(sums.data() + node * d, points.point(first).data(),
                                    points.point(i).data(), d, scale[depth], decision);
    self(self, 2 * node, depth + 1, x > 0 ? first : i);
    self(self, 2 * node + 1, depth + 1, x > 0 ? i : first);
  };
  for (std::size_t i = 0; i < trimmed; ++i) push(push, 1, 0, i);

  for (std::size_t node = 1; node < leaves; ++node) {
    const std::size_t depth = static_cast<std::size_t>(std::bit_width(node)) - 1;
    const std::span<const double> v(sums.data() + node * d, d);
    // sum(a) - sum(b) = V, so |c(child) - c(parent)| = |c(a) - c(b)| / 2 = |V| / (2 pairs)
    const double pairs = static_cast<double>((trimmed >> depth) / 2);
    realized[depth] = std::max(realized[depth], std::sqrt(dot(v, v)) / (2.0 * pairs));
  }
  trace.levels = levels;
  for (std::size_t k = 0; k < levels; ++k) {
    trace.realized_level_max.push_back(realized[k]);
    const double child = static_cast<double>(trimmed >> (k + 1));
    trace.per_level_bound.push_back(diam / (2.0 * std::sqrt(child)));
    trace.cumulative_bound += trace.per_level_bound.back();
  }
  trace.leaf_groups = level;

  TverbergCertificate& cert = out.certificate;
  cert.dimension = points.dim();
  cert.n = n;
  cert.eps = eps;
  cert.radius_basis = basis;
  cert.ball.center = root_center;
  cert.ball.radius = eps * diam;
  for (std::size_t g = 0; g < level.size(); ++g) {
    HullWitness w;
    w.support = level[g];
    w.weights.assign(node_size, 1.0 / static_cast<double>(node_size));
    w.point.assign(leaf_sums.begin() + static_cast<std::ptrdiff_t>(g * d),
                   leaf_sums.begin() + static_cast<std::ptrdiff_t>((g + 1) * d));
    for (double& v : w.point) v /= static_cast<double>(node_size);
    cert.witnesses.push_back(std::move(w));
  }
  cert.groups = std::move(level);
  for (std::size_t j = trimmed; j < n; ++j) {
    cert.groups[(j - trimmed) % cert.groups.size()].push_back(j);
  }

  const bool power_of_two = trimmed == n;
  const double e2 = eps * eps;
  cert.claims.size_cap = power_of_two ? 8.0 / e2 : 16.0 / e2;
  cert.claims.min_groups = static_cast<double>(n) * e2 / (power_of_two ? 8.0 : 16.0);
  cert.trace.algo = "det";
  cert.trace.rounds = 1;
  return out;
}

}  // namespace ndtv
