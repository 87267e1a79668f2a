#include "ndtv/sampling.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "ndtv/halving.hpp"

namespace ndtv {

namespace {

// Relative slack under which beta_0 and beta count as tied. Both samplers
// share it so that rounding differences between the direct and the
// incremental evaluation cannot flip a mathematically tied decision.
constexpr double kTieSlack = 1e-11;

void require_subset_size(const PointSet& points, std::size_t r) {
  if (r < 1 || r > points.size()) {
    throw DomainError("sample size r = " + std::to_string(r) + " must lie in [1, n = " +
                      std::to_string(points.size()) + "]");
  }
}

PointSet centered_copy(const PointSet& points, const Vector& c) {
  std::vector<double> coords(points.coords().begin(), points.coords().end());
  const std::size_t d = points.dim();
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= c[i % d];
  return PointSet(points.size(), d, std::move(coords));
}

void finish(const PointSet& points, const Vector& c, SampleResult& res) {
  res.centroid_dist = distance(centroid_of(points, res.indices), c);
}

bool prefer_zero(double beta0, double beta, double scale) {
  return beta0 <= beta + kTieSlack * scale;
}

}  // namespace

SampleResult sample_mean_without_replacement(const PointSet& points, std::size_t r, Rng& rng) {
  require_subset_size(points, r);
  const std::size_t n = points.size();
  IndexList perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  // Partial Fisher-Yates: the first r slots form a uniform r-subset.
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(perm[i], perm[j]);
  }
  SampleResult res;
  res.indices.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(r));
  const PointSetStats stats = compute_stats(points);
  finish(points, stats.centroid, res);
  // E|c(R) - c(P)|^2 = sigma^2 (n - r) / (r (n - 1)) <= sigma^2 / r.
  res.bound = stats.avg_price / std::sqrt(static_cast<double>(r));
  return res;
}

SampleResult sample_mean_with_replacement(const PointSet& points, std::size_t r, Rng& rng) {
  if (r < 1) throw DomainError("sample size r must be at least 1");
  SampleResult res;
  res.indices.resize(r);
  for (auto& i : res.indices) i = static_cast<std::size_t>(rng.below(points.size()));
  const PointSetStats stats = compute_stats(points);
  finish(points, stats.centroid, res);
  res.bound = stats.avg_price / std::sqrt(static_cast<double>(r));
  return res;
}

double conditional_expectation_direct(const PointSet& centered, std::size_t r,
                                      std::span<const unsigned char> prefix) {
  const std::size_t n = centered.size();
  const std::size_t t = prefix.size();
  if (t > n) throw DomainError("assignment prefix longer than the point set");
  std::size_t alpha = 0;
  for (unsigned char x : prefix) alpha += x ? 1 : 0;
  if (alpha > r || r - alpha > n - t) throw DomainError("infeasible assignment prefix");

  const double need = static_cast<double>(r - alpha);
  const double rem = static_cast<double>(n - t);
  const double single = n > t ? need / rem : 0.0;
  const double both = n > t + 1 ? need * (need - 1.0) / (rem * (rem - 1.0)) : 0.0;
  auto expect = [&](std::size_t i) -> double { return i < t ? (prefix[i] ? 1.0 : 0.0) : single; };
  auto expect_pair = [&](std::size_t i, std::size_t j) -> double {  // i < j
    if (j < t) return (prefix[i] && prefix[j]) ? 1.0 : 0.0;
    if (i < t) return prefix[i] ? single : 0.0;
    return both;
  };

  double b = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    auto pi = centered.point(i);
    b += expect(i) * dot(pi, pi);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = expect_pair(i, j);
      if (e != 0.0) c += e * dot(pi, centered.point(j));
    }
  }
  return b + 2.0 * c;
}

ConditionalState::ConditionalState(const PointSet& points, std::size_t r, Vector center)
    : pts_(points), center_(std::move(center)), n_(points.size()), r_(r) {
  require_subset_size(points, r);
  const std::size_t d = points.dim();
  if (center_.empty()) center_.assign(d, 0.0);
  if (center_.size() != d) throw DomainError("center has the wrong dimension");
  x_.reserve(n_);
  current_.resize(d);

  // One backward pass: R_t = sum_{a >= t} p_a . (sum_{b > a} p_b) and the
  // suffix sums of |p|^2, from which Q_t follows.
  std::vector<double> q_suffix(n_ + 1, 0.0);
  r_suffix_.assign(n_ + 1, 0.0);
  Vector suffix(d, 0.0);
  for (std::size_t a = n_; a-- > 0;) {
    auto p = shifted(a);
    q_suffix[a] = q_suffix[a + 1] + dot(p, p);
    r_suffix_[a] = r_suffix_[a + 1] + dot(p, suffix);
    for (std::size_t k = 0; k < d; ++k) suffix[k] += p[k];
  }
  q_total_ = q_suffix[0];
  q_prefix_.resize(n_ + 1);
  for (std::size_t t = 0; t <= n_; ++t) q_prefix_[t] = q_total_ - q_suffix[t];
  p_total_ = suffix;
  p_prefix_.assign(d, 0.0);
  px_prefix_.assign(d, 0.0);
  beta_ = beta_with(0, 0, 0.0, 0.0, 0.0);
}

std::span<const double> ConditionalState::shifted(std::size_t t) const {
  if (current_t_ != t) {
    auto p = pts_.point(t);
    for (std::size_t k = 0; k < p.size(); ++k) current_[k] = p[k] - center_[k];
    current_t_ = t;
  }
  return current_;
}

double ConditionalState::beta_with(std::size_t t, std::size_t alpha, double qx, double l,
                                   double m) const {
  const double need = static_cast<double>(r_ - alpha);
  const double rem = static_cast<double>(n_ - t);
  const double single = n_ > t ? need / rem : 0.0;
  const double both = n_ > t + 1 ? need * (need - 1.0) / (rem * (rem - 1.0)) : 0.0;
  const double b = qx + single * (q_total_ - q_prefix_[t]);
  const double c = l + single * m + both * r_suffix_[t];
  return b + 2.0 * c;
}

double ConditionalState::evaluate(bool x) const {
  if (t_ >= n_) throw DomainError("conditional state already complete");
  auto p = shifted(t_);
  const std::size_t d = pts_.dim();
  const std::size_t alpha = alpha_ + (x ? 1 : 0);
  if (alpha > r_ || r_ - alpha > n_ - t_ - 1) throw DomainError("infeasible assignment");
  const double qx = qx_ + (x ? dot(p, p) : 0.0);
  const double l = l_ + (x ? dot(p, px_prefix_) : 0.0);
  // M_{t+1} = P^x_{t+1} . (P_n - P_{t+1})
  double m = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    const double px = px_prefix_[k] + (x ? p[k] : 0.0);
    m += px * (p_total_[k] - p_prefix_[k] - p[k]);
  }
  return beta_with(t_ + 1, alpha, qx, l, m);
}

void ConditionalState::commit(bool x) {
  const double next = evaluate(x);
  auto p = shifted(t_);
  if (x) {
    qx_ += dot(p, p);
    l_ += dot(p, px_prefix_);
    for (std::size_t k = 0; k < p.size(); ++k) px_prefix_[k] += p[k];
    ++alpha_;
  }
  for (std::size_t k = 0; k < p.size(); ++k) p_prefix_[k] += p[k];
  x_.push_back(x ? 1 : 0);
  ++t_;
  beta_ = next;
}

SampleResult derand_sample_slow(const PointSet& points, std::size_t r) {
  require_subset_size(points, r);
  const std::size_t n = points.size();
  const Vector c = centroid(points);
  const PointSet centered = centered_copy(points, c);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) scale += dot(centered.point(i), centered.point(i));

  std::vector<unsigned char> x;
  x.reserve(n);
  std::size_t alpha = 0;
  SampleResult res;
  double beta = conditional_expectation_direct(centered, r, x);
  res.beta_trace.push_back(beta);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t need = r - alpha, rem = n - t;
    bool pick;
    if (need == rem) {
      pick = true;
    } else if (need == 0) {
      pick = false;
    } else {
      x.push_back(0);
      const double beta0 = conditional_expectation_direct(centered, r, x);
      x.pop_back();
      pick = !prefer_zero(beta0, beta, scale);
    }
    x.push_back(pick ? 1 : 0);
    alpha += pick ? 1 : 0;
    beta = conditional_expectation_direct(centered, r, x);
    res.beta_trace.push_back(beta);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i]) res.indices.push_back(i);
  }
  finish(points, c, res);
  res.bound = avg_price(points) / std::sqrt(static_cast<double>(r));
  return res;
}

SampleResult derand_sample_fast(const PointSet& points, std::size_t r) {
  require_subset_size(points, r);
  const std::size_t n = points.size();
  const Vector c = centroid(points);
  ConditionalState state(points, r, c);

  SampleResult res;
  res.beta_trace.reserve(n + 1);
  res.beta_trace.push_back(state.beta());
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t need = r - state.selected(), rem = n - t;
    bool pick;
    if (need == rem) {
      pick = true;
    } else if (need == 0) {
      pick = false;
    } else {
      pick = !prefer_zero(state.evaluate(false), state.beta(), state.scale());
    }
    state.commit(pick);
    res.beta_trace.push_back(state.beta());
    if (pick) res.indices.push_back(t);
  }
  finish(points, c, res);
  // avg_price(P) = sqrt(Q_n / n)
  res.bound = std::sqrt(state.scale() / static_cast<double>(n)) / std::sqrt(static_cast<double>(r));
  return res;
}

SampleResult derand_sample_by_halving(const PointSet& points, std::size_t target) {
  require_subset_size(points, target);
  const PointSetStats stats = compute_stats(points);
  const double diam = stats.diameter_bound;

  IndexList current(points.size());
  std::iota(current.begin(), current.end(), std::size_t{0});
  double bound = 0.0;
  while (current.size() >= 2 * target && current.size() >= 2) {
    // An odd point out is dropped before halving; it moves the centroid of
    // the remaining 2k points by at most diam / (2k + 1).
    const bool odd = current.size() % 2 != 0;
    std::span<const std::size_t> even(current.data(), current.size() - (odd ? 1 : 0));
    const HalvingState st = derand_halving_state(points, even);
    const std::size_t half = st.signs.size();
    IndexList kept;
    kept.reserve(half);
    for (std::size_t i = 0; i < half; ++i) kept.push_back(even[2 * i + (st.signs[i] > 0 ? 0 : 1)]);
    bound += diam / (2.0 * std::sqrt(static_cast<double>(half)));
    if (odd) bound += diam / static_cast<double>(2 * half + 1);
    current = std::move(kept);
  }
  SampleResult res;
  res.indices = std::move(current);
  finish(points, stats.centroid, res);
  res.bound = bound;
  return res;
}

}  // namespace ndtv
