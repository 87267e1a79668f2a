#include "ndtv/tverberg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <numeric>
#include <sstream>

namespace ndtv {

const char* to_string(RadiusBasis basis) {
  switch (basis) {
    case RadiusBasis::avg_price:
      return "avg_price";
    case RadiusBasis::diameter:
      return "diameter";
    case RadiusBasis::diameter_bound:
      return "diameter_bound";
  }
  return "unknown";
}

RadiusBasis radius_basis_from_string(const std::string& text) {
  if (text == "avg_price") return RadiusBasis::avg_price;
  if (text == "diameter") return RadiusBasis::diameter;
  if (text == "diameter_bound") return RadiusBasis::diameter_bound;
  throw DomainError("unknown radius basis '" + text + "'");
}

std::size_t TverbergCertificate::max_group_size() const {
  std::size_t m = 0;
  for (const auto& g : groups) m = std::max(m, g.size());
  return m;
}

RoundSetup prepare_round(const PointSet& points, double eps, MergeMode mode) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  const double n = static_cast<double>(points.size());
  const double gate = 27.0 / std::pow(eps, 4);
  if (n < gate) {
    std::ostringstream msg;
    msg << "n = " << points.size() << " below the required 27/eps^4 = " << gate
        << " for eps = " << eps;
    throw DomainError(msg.str());
  }
  RoundSetup s;
  s.eps = eps;
  s.mode = mode;
  const PointSetStats stats = compute_stats(points);
  s.center = stats.centroid;
  s.sigma = stats.avg_price;
  s.diameter_bound = stats.diameter_bound;
  s.zeta = 2.0 * (1.0 + eps * eps / 8.0);
  s.group_size = static_cast<std::size_t>(ceil_tolerant(s.zeta / (eps * eps)));
  s.num_groups = points.size() / s.group_size;
  if (s.num_groups < 2 || points.size() % s.group_size > s.num_groups) {
    throw DomainError("too few points to cut into groups of size M or M+1");
  }
  s.threshold = mode == MergeMode::pairs ? static_cast<double>(s.num_groups) / 2.0
                                         : 2.0 * static_cast<double>(s.num_groups) / 3.0;
  return s;
}

PartitionRound run_round(const PointSet& points, const RoundSetup& setup, Rng& rng) {
  const std::size_t n = points.size(), d = points.dim();
  const std::size_t t = setup.num_groups;
  const std::size_t larger = n % setup.group_size;  // groups holding M+1 points

  // Shuffling the multiset of group labels gives the same uniformly random
  // cut as shuffling the points, with a 4-byte working array.
  std::vector<std::uint32_t> label(n);
  std::size_t pos = 0;
  for (std::size_t g = 0; g < t; ++g) {
    const std::size_t size = setup.group_size + (g < larger ? 1 : 0);
    std::fill_n(label.begin() + static_cast<std::ptrdiff_t>(pos), size,
                static_cast<std::uint32_t>(g));
    pos += size;
  }
  rng.shuffle(std::span<std::uint32_t>(label));

  PartitionRound round;
  round.groups.resize(t);
  for (std::size_t g = 0; g < t; ++g) {
    round.groups[g].reserve(setup.group_size + (g < larger ? 1 : 0));
  }
  // Members and group sums in one sequential sweep over the points.
  round.centroids.assign(t * d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t g = label[i];
    round.groups[g].push_back(i);
    auto p = points.point(i);
    double* sum = round.centroids.data() + g * d;
    for (std::size_t k = 0; k < d; ++k) sum[k] += p[k];
  }
  const double radius = setup.eps * setup.sigma;
  round.good.reserve(t);
  for (std::size_t g = 0; g < t; ++g) {
    std::span<double> c(round.centroids.data() + g * d, d);
    const double size = static_cast<double>(round.groups[g].size());
    for (double& v : c) v /= size;
    const bool good = distance(c, setup.center) <= radius;
    round.good.push_back(good);
    if (!good) ++round.bad_count;
  }
  round.accepted = static_cast<double>(round.bad_count) < setup.threshold;
  return round;
}

RandomPartition random_tverberg_core(const PointSet& points, double eps, Rng& rng,
                                     MergeMode mode) {
  const RoundSetup setup = prepare_round(points, eps, mode);

  PartitionRound round;
  std::size_t rounds = 0;
  do {
    round = run_round(points, setup, rng);
    ++rounds;
    if (!round.accepted && rounds % 64 == 0) {
      std::clog << "ndtv: " << rounds << " partition rounds rejected so far (last bad count "
                << round.bad_count << " of " << setup.num_groups << ")\n";
    }
  } while (!round.accepted);

  std::vector<std::size_t> good_ids, bad_ids;
  for (std::size_t g = 0; g < round.groups.size(); ++g) {
    (round.good[g] ? good_ids : bad_ids).push_back(g);
  }

  RandomPartition out;
  TverbergCertificate& cert = out.certificate;
  cert.dimension = points.dim();
  cert.n = points.size();
  cert.eps = eps;
  cert.radius_basis = RadiusBasis::avg_price;
  cert.ball.center = setup.center;
  cert.ball.radius = eps * setup.sigma;
  for (std::size_t g : good_ids) {
    const IndexList& members = round.groups[g];
    HullWitness w;
    w.support = members;
    w.weights.assign(members.size(), 1.0 / static_cast<double>(members.size()));
    const double* c = round.centroids.data() + g * points.dim();
    w.point.assign(c, c + points.dim());
    cert.witnesses.push_back(std::move(w));
    cert.groups.push_back(members);
  }
  // Bad group j joins good group j (pairs) or j mod |good| (triples).
  for (std::size_t j = 0; j < bad_ids.size(); ++j) {
    const std::size_t target = mode == MergeMode::pairs ? j : j % good_ids.size();
    const IndexList& bad = round.groups[bad_ids[j]];
    cert.groups[target].insert(cert.groups[target].end(), bad.begin(), bad.end());
  }

  const double e2 = eps * eps;
  const double cap = mode == MergeMode::pairs ? 4.0 / e2 + 4.5 : 6.0 / e2 + 7.0;
  cert.claims.size_cap = cap;
  cert.claims.min_groups = static_cast<double>(points.size()) / cap;
  cert.trace.algo = mode == MergeMode::pairs ? "random-core" : "fast";
  cert.trace.rounds = rounds;
  cert.trace.bad_count = round.bad_count;

  RandomPartitionTrace& tr = out.trace;
  tr.zeta = setup.zeta;
  tr.group_size = setup.group_size;
  tr.num_groups = setup.num_groups;
  tr.bad_count = round.bad_count;
  tr.threshold = setup.threshold;
  tr.rounds_used = rounds;
  tr.diameter_bound = setup.diameter_bound;
  return out;
}

TverbergCertificate tverberg_partition(const PointSet& points, double eps, Rng& rng,
                                       std::optional<double> diameter) {
  if (!(eps > 0.0 && eps < 1.0 / std::sqrt(2.0))) {
    throw DomainError("eps must lie in (0, 1/sqrt(2))");
  }
  RandomPartition core = random_tverberg_core(points, std::sqrt(2.0) * eps, rng);
  TverbergCertificate cert = std::move(core.certificate);
  cert.eps = eps;
  if (diameter) {
    if (!(*diameter >= 0.0)) throw DomainError("diameter must be nonnegative");
    cert.radius_basis = RadiusBasis::diameter;
    cert.ball.radius = eps * *diameter;
  } else {
    cert.radius_basis = RadiusBasis::diameter_bound;
    cert.ball.radius = eps * core.trace.diameter_bound;
  }
  const double cap = 2.0 / (eps * eps) + 4.5;
  cert.claims.size_cap = cap;
  cert.claims.min_groups = static_cast<double>(points.size()) / cap;
  cert.trace.algo = "random";
  return cert;
}

TverbergCertificate tverberg_fast(const PointSet& points, double eps, Rng& rng) {
  return random_tverberg_core(points, eps, rng, MergeMode::triples).certificate;
}

const CheckOutcome* VerificationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

VerificationReport verify_certificate(const PointSet& points, const TverbergCertificate& cert,
                                      double tol) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
    report.passed = report.passed && ok;
  };
  const std::size_t n = points.size(), d = points.dim();

  // (a) partition validity
  std::vector<std::size_t> owner(n, SIZE_MAX);
  {
    std::ostringstream why;
    bool ok = true;
    if (cert.n != n || cert.dimension != d) {
      ok = false;
      why << "certificate header (n=" << cert.n << ", d=" << cert.dimension
          << ") does not match points (n=" << n << ", d=" << d << "); ";
    }
    if (cert.groups.empty()) {
      ok = false;
      why << "no groups; ";
    }
    std::size_t covered = 0;
    for (std::size_t g = 0; g < cert.groups.size() && ok; ++g) {
      if (cert.groups[g].empty()) {
        ok = false;
        why << "group " << g << " is empty; ";
      }
      for (std::size_t i : cert.groups[g]) {
        if (i >= n) {
          ok = false;
          why << "group " << g << " holds out-of-range index " << i << "; ";
          break;
        }
        if (owner[i] != SIZE_MAX) {
          ok = false;
          why << "index " << i << " appears in groups " << owner[i] << " and " << g << "; ";
          break;
        }
        owner[i] = g;
        ++covered;
      }
    }
    if (ok && covered != n) {
      ok = false;
      why << "groups cover " << covered << " of " << n << " indices; ";
    }
    add("partition", ok, ok ? std::to_string(cert.groups.size()) + " groups" : why.str());
    if (!ok) return report;
  }

  // (b) witness validity, (c) witness inside the ball
  std::vector<Vector> points_of(cert.witnesses.size());
  {
    std::ostringstream why;
    bool ok = cert.witnesses.size() == cert.groups.size();
    if (!ok) why << cert.witnesses.size() << " witnesses for " << cert.groups.size() << " groups; ";
    for (std::size_t g = 0; g < cert.witnesses.size() && ok; ++g) {
      const HullWitness& w = cert.witnesses[g];
      if (w.support.empty() || w.support.size() != w.weights.size()) {
        ok = false;
        why << "witness " << g << " has malformed support/weights; ";
        break;
      }
      double total = 0.0;
      for (std::size_t k = 0; k < w.support.size(); ++k) {
        const std::size_t i = w.support[k];
        if (i >= n || owner[i] != g) {
          ok = false;
          why << "witness " << g << " uses index " << i << " outside its group; ";
          break;
        }
        if (!(w.weights[k] >= -tol)) {
          ok = false;
          why << "witness " << g << " has negative weight " << w.weights[k] << "; ";
          break;
        }
        total += w.weights[k];
      }
      if (!ok) break;
      if (std::abs(total - 1.0) > tol) {
        ok = false;
        why << "witness " << g << " weights sum to " << total << "; ";
        break;
      }
      points_of[g] = combine(points, w.support, w.weights);
      if (!w.point.empty()) {
        if (w.point.size() != d) {
          ok = false;
          why << "witness " << g << " point has wrong dimension; ";
          break;
        }
        for (std::size_t k = 0; k < d; ++k) {
          if (std::abs(w.point[k] - points_of[g][k]) > tol) {
            ok = false;
            why << "witness " << g << " point differs from its combination in coordinate " << k
                << "; ";
            break;
          }
        }
      }
    }
    add("witnesses", ok, ok ? "all convex combinations valid" : why.str());
    if (!ok) return report;
  }
  {
    std::ostringstream why;
    bool ok = cert.ball.center.size() == d && cert.ball.radius >= 0.0;
    double worst = 0.0;
    if (!ok) why << "ball has wrong dimension or negative radius; ";
    for (std::size_t g = 0; g < points_of.size() && ok; ++g) {
      const double dist = distance(points_of[g], cert.ball.center);
      worst = std::max(worst, dist);
      if (dist > cert.ball.radius + tol) {
        ok = false;
        why << "witness " << g << " at distance " << dist << " exceeds radius "
            << cert.ball.radius << "; ";
      }
    }
    if (ok) why << "max witness distance " << worst << " <= radius " << cert.ball.radius;
    add("ball", ok, why.str());
  }

  // (d) claimed caps
  {
    std::ostringstream why;
    const std::size_t biggest = cert.max_group_size();
    const double k = static_cast<double>(cert.groups.size());
    const bool size_ok = static_cast<double>(biggest) <= cert.claims.size_cap + 1e-9;
    const bool count_ok = k >= cert.claims.min_groups - 1e-9;
    why << "max |P_i| = " << biggest << " (cap " << cert.claims.size_cap << "), k = "
        << cert.groups.size() << " (claimed >= " << cert.claims.min_groups << ")";
    add("claims", size_ok && count_ok, why.str());
  }
  return report;
}

}  // namespace ndtv
