#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ndtv/core.hpp"
#include "ndtv/random.hpp"
#include "oracles.hpp"

using ndtv::PointSet;

namespace {

PointSet basis(std::size_t d) {
  std::vector<double> c(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) c[i * d + i] = 1.0;
  return PointSet(d, d, std::move(c));
}

PointSet unit_square() { return PointSet::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("point sets reject empty and non-finite input") {
  CHECK_THROWS_AS(PointSet(0, 3, {}), ndtv::DomainError);
  CHECK_THROWS_AS(PointSet(2, 0, {}), ndtv::DomainError);
  CHECK_THROWS_AS(PointSet(1, 2, {1.0}), ndtv::DomainError);
  CHECK_THROWS_AS(PointSet(1, 2, {1.0, NAN}), ndtv::DomainError);
  CHECK_THROWS_AS(PointSet::from_rows({}), ndtv::DomainError);
  CHECK_THROWS_AS(PointSet::from_rows({{1, 2}, {3}}), ndtv::DomainError);
}

TEST_CASE("centroid") {
  SUBCASE("single point") {
    const auto c = ndtv::centroid(PointSet::from_rows({{3, 7}}));
    CHECK(c[0] == 3.0);
    CHECK(c[1] == 7.0);
  }
  SUBCASE("standard basis") {
    for (std::size_t d : {2u, 5u, 17u}) {
      for (double v : ndtv::centroid(basis(d))) CHECK(v == doctest::Approx(1.0 / d).epsilon(1e-15));
    }
  }
  SUBCASE("matches a long double re-summation") {
    ndtv::Rng rng(3);
    const auto p = oracle::uniform_points(100, 2, rng);
    const auto c = ndtv::centroid(p);
    const auto ref = oracle::centroid(oracle::rows_of(p));
    CHECK(std::abs(c[0] - ref[0]) <= 1e-12);
    CHECK(std::abs(c[1] - ref[1]) <= 1e-12);
  }
  SUBCASE("translation equivariant") {
    ndtv::Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = oracle::gaussian_points(30, 4, rng);
      std::vector<double> shift(4), moved(p.coords().begin(), p.coords().end());
      for (double& s : shift) s = 100.0 * rng.normal();
      for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += shift[i % 4];
      const auto a = ndtv::centroid(p), b = ndtv::centroid(PointSet(30, 4, moved));
      for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(b[k] - a[k] - shift[k]) <= 1e-9);
    }
  }
  SUBCASE("centroid_of a subset") {
    const auto sq = unit_square();
    const ndtv::IndexList idx{1, 3};
    const auto c = ndtv::centroid_of(sq, idx);
    CHECK(c[0] == 1.0);
    CHECK(c[1] == 0.5);
  }
}

TEST_CASE("avg_price") {
  SUBCASE("copies of one point") {
    CHECK(ndtv::avg_price(PointSet::from_rows({{2, -1}, {2, -1}, {2, -1}})) == 0.0);
  }
  SUBCASE("standard basis in four dimensions") {
    CHECK(ndtv::avg_price(basis(4)) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-12));
    CHECK(ndtv::avg_price(basis(4)) == doctest::Approx(0.866025).epsilon(1e-6));
  }
  SUBCASE("agrees with the one-pass algebraic form") {
    ndtv::Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = oracle::uniform_points(2 + trial % 40, 1 + trial % 7, rng, -3.0, 3.0);
      const double a = ndtv::avg_price(p), b = oracle::avg_price_one_pass(oracle::rows_of(p));
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, b));
    }
  }
  SUBCASE("stable far from the origin") {
    const auto p = PointSet::from_rows({{1e9 + 1}, {1e9 - 1}});
    CHECK(ndtv::avg_price(p) == 1.0);
  }
}

TEST_CASE("diameter") {
  CHECK(ndtv::diameter_exact(PointSet::from_rows({{4, 4, 4}})) == 0.0);
  CHECK(ndtv::diameter_exact(basis(9)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(ndtv::diameter_exact(PointSet::from_rows({{0, 0}, {3, 4}})) == 5.0);

  ndtv::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = oracle::gaussian_points(3 + trial % 30, 1 + trial % 5, rng);
    const double exact = ndtv::diameter_exact(p);
    CHECK(exact == doctest::Approx(oracle::diameter(oracle::rows_of(p))).epsilon(1e-12));
    const double bound = ndtv::diameter_bound(p);
    CHECK(bound >= exact - 1e-12);
    CHECK(bound <= 2.0 * exact + 1e-12);
  }
}

TEST_CASE("avg_price never exceeds diameter / sqrt 2") {
  ndtv::Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.below(40), d = 1 + rng.below(6);
    const auto p = trial % 2 ? oracle::gaussian_points(n, d, rng) : oracle::uniform_points(n, d, rng);
    REQUIRE(ndtv::avg_price(p) <= ndtv::diameter_exact(p) / std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("standard basis is the tight case") {
  for (std::size_t d : {2u, 3u, 8u, 64u}) {
    const auto p = basis(d);
    const double sigma = ndtv::avg_price(p), diam = ndtv::diameter_exact(p);
    CHECK(std::abs(sigma - std::sqrt((d - 1.0) / d)) <= 1e-9);
    CHECK(std::abs(sigma - std::sqrt(1.0 - 1.0 / d) * diam / std::sqrt(2.0)) <= 1e-9);
  }
}

TEST_CASE("combine builds convex combinations") {
  const auto sq = unit_square();
  const ndtv::IndexList support{0, 3};
  const std::vector<double> w{0.25, 0.75};
  const auto x = ndtv::combine(sq, support, w);
  CHECK(x[0] == 0.75);
  CHECK(x[1] == 0.75);
}

TEST_CASE("dist_to_hull") {
  const auto sq = unit_square();
  SUBCASE("member of the group") {
    const std::vector<double> q{1, 0};
    const auto res = ndtv::dist_to_hull(q, sq);
    CHECK(res.distance == 0.0);
    REQUIRE(res.witness.support.size() == 1);
    CHECK(res.witness.support[0] == 1);
    CHECK(res.witness.weights[0] == 1.0);
    CHECK(res.converged);
  }
  SUBCASE("centroid of the group") {
    const auto c = ndtv::centroid(sq);
    const auto res = ndtv::dist_to_hull(c, sq);
    CHECK(res.distance <= 1e-7);
    double total = 0.0;
    for (double w : res.witness.weights) {
      CHECK(w >= 0.0);
      total += w;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("outside the unit square") {
    const std::vector<double> q{2, 0.5};
    const auto res = ndtv::dist_to_hull(q, sq);
    CHECK(std::abs(res.distance - 1.0) <= 1e-7);
    CHECK(res.distance ==
          doctest::Approx(oracle::hull_distance_2d({2, 0.5}, oracle::rows_of(sq))).epsilon(1e-7));
  }
  SUBCASE("witness realizes the reported distance") {
    ndtv::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = oracle::gaussian_points(2 + rng.below(30), 2 + rng.below(10), rng);
      std::vector<double> q(g.dim());
      for (double& v : q) v = 3.0 * rng.normal();
      const auto res = ndtv::dist_to_hull(q, g);
      std::vector<double> x(g.dim(), 0.0);
      for (std::size_t s = 0; s < res.witness.support.size(); ++s)
        for (std::size_t k = 0; k < g.dim(); ++k)
          x[k] += res.witness.weights[s] * g.point(res.witness.support[s])[k];
      CHECK(std::abs(oracle::dist(x, q) - res.distance) <= 1e-9);
      for (std::size_t k = 0; k < g.dim(); ++k) CHECK(std::abs(x[k] - res.witness.point[k]) <= 1e-9);
    }
  }
  SUBCASE("agrees with planar brute force") {
    ndtv::Rng rng(9);
    for (int trial = 0; trial < 300; ++trial) {
      const auto g = oracle::uniform_points(1 + rng.below(12), 2, rng);
      const std::vector<double> q{3.0 * rng.uniform() - 1.0, 3.0 * rng.uniform() - 1.0};
      const auto res = ndtv::dist_to_hull(q, g, {1e-9, 0});
      const double ref = oracle::hull_distance_2d(q, oracle::rows_of(g));
      CHECK(res.distance >= ref - 1e-12);
      CHECK(res.distance <= ref + 1e-8);
    }
  }
  SUBCASE("zero for convex combinations of the group") {
    ndtv::Rng rng(10);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t m = 1 + rng.below(20), d = 1 + rng.below(12);
      const auto g = oracle::gaussian_points(m, d, rng);
      std::vector<double> w(m);
      double total = 0.0;
      for (double& v : w) total += (v = rng.uniform());
      for (double& v : w) v /= total;
      ndtv::IndexList all(m);
      std::iota(all.begin(), all.end(), std::size_t{0});
      const auto q = ndtv::combine(g, all, w);
      const auto res = ndtv::dist_to_hull(q, g);
      CHECK(res.distance <= 1e-7 * std::max(1.0, ndtv::coordinate_scale(g)));
    }
  }
  SUBCASE("dimension mismatch") {
    const std::vector<double> q{1, 2, 3};
    CHECK_THROWS_AS(ndtv::dist_to_hull(q, sq), ndtv::DomainError);
  }
}

TEST_CASE("ceil_tolerant") {
  CHECK(ndtv::ceil_tolerant(2.0 / (0.5 * 0.5)) == 8);
  CHECK(ndtv::ceil_tolerant(1.0 / (2.0 * 0.2 * 0.2)) == 13);
  CHECK(ndtv::ceil_tolerant(8.25) == 9);
  CHECK(ndtv::ceil_tolerant(3.0000000000001) == 3);
}

TEST_CASE("rng") {
  SUBCASE("engine follows the standard sequence") {
    ndtv::Rng rng(5489u);
    std::uint64_t v = 0;
    for (int i = 0; i < 10000; ++i) v = rng.next_u64();
    CHECK(v == 9981545732273789042ull);
  }
  SUBCASE("same seed, same stream") {
    ndtv::Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
      CHECK(a.uniform() == b.uniform());
      CHECK(a.below(17) == b.below(17));
    }
  }
  SUBCASE("below stays in range and hits every value") {
    ndtv::Rng rng(1);
    std::vector<int> seen(7, 0);
    for (int i = 0; i < 7000; ++i) {
      const auto v = rng.below(7);
      REQUIRE(v < 7);
      ++seen[v];
    }
    for (int c : seen) CHECK(c > 800);
  }
  SUBCASE("normal has unit variance") {
    ndtv::Rng rng(2);
    double s = 0.0, s2 = 0.0;
    const int m = 200000;
    for (int i = 0; i < m; ++i) {
      const double x = rng.normal();
      s += x;
      s2 += x * x;
    }
    CHECK(std::abs(s / m) < 0.01);
    CHECK(std::abs(s2 / m - 1.0) < 0.02);
  }
}
