#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "ndtv/applications.hpp"
#include "ndtv/tverberg.hpp"
#include "oracles.hpp"

using ndtv::PointSet;

namespace {

PointSet copies(std::size_t n, std::size_t d, double value) {
  return PointSet(n, d, std::vector<double>(n * d, value));
}

PointSet circle(std::size_t n) {
  std::vector<double> c;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    c.push_back(std::cos(a));
    c.push_back(std::sin(a));
  }
  return PointSet(n, 2, std::move(c));
}

std::vector<double> as_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("centerball") {
  SUBCASE("identical points") {
    ndtv::Rng rng(61);
    const auto p = copies(2000, 3, 4.0);
    for (bool det : {true, false}) {
      const auto res = ndtv::centerball(p, det ? 0.2 : 0.4, rng, det);
      CHECK(res.depth_lower_bound == res.certificate.groups.size());
      for (const auto& w : res.certificate.witnesses) {
        CHECK(ndtv::distance(w.point, res.ball.center) == 0.0);
      }
      CHECK(ndtv::verify_certificate(p, res.certificate).passed);
    }
  }
  SUBCASE("randomized depth at eps = 0.2") {
    ndtv::Rng rng(62);
    const auto p = oracle::gaussian_points(5000, 6, rng);
    const auto res = ndtv::centerball(p, 0.2, rng, false);
    CHECK(res.depth_lower_bound >= static_cast<std::size_t>(std::ceil(5000 / 54.5)));
    CHECK(res.ball.radius == doctest::Approx(0.2 * ndtv::diameter_bound(p)));
    CHECK(ndtv::verify_certificate(p, res.certificate).passed);
  }
  SUBCASE("planar directional probe") {
    ndtv::Rng rng(63);
    for (int trial = 0; trial < 5; ++trial) {
      const auto p = oracle::uniform_points(500, 2, rng);
      const auto res = ndtv::centerball(p, 0.25, rng, true);
      CHECK(res.depth_lower_bound >= 500 * 0.0625 / 16.0);
      CHECK(ndtv::halfspace_depth_check_2d(p, res.ball, 3600) >= res.depth_lower_bound);
    }
  }
}

TEST_CASE("halfspace depth probe") {
  const auto sq = PointSet::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  SUBCASE("ball containing everything") {
    const ndtv::Ball big{{0.5, 0.5}, 10.0};
    CHECK(ndtv::halfspace_depth_check_2d(sq, big, 64) == 4);
  }
  SUBCASE("small ball in the middle of the square") {
    const ndtv::Ball small{{0.5, 0.5}, 0.01};
    CHECK(ndtv::halfspace_depth_check_2d(sq, small, 3600) == 2);
  }
  SUBCASE("only defined in the plane") {
    const auto p = copies(4, 3, 0.0);
    CHECK_THROWS_AS(ndtv::halfspace_depth_check_2d(p, {{0, 0, 0}, 1.0}, 16), ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::halfspace_depth_check_2d(sq, {{0, 0}, 1.0}, 4), ndtv::DomainError);
  }
}

TEST_CASE("selection ball") {
  SUBCASE("r = ceil(2 / eps^2)") {
    const auto p = copies(3, 2, 0.0);
    CHECK(ndtv::selection_ball(p, 0.5).r == 8);
    CHECK(ndtv::selection_ball(p, 0.3).r == 23);
  }
  SUBCASE("identical points always collide") {
    ndtv::Rng rng(64);
    const auto p = copies(50, 2, 1.0);
    const auto sel = ndtv::selection_ball(p, 0.5);
    for (int t = 0; t < 100; ++t) {
      ndtv::IndexList seq(sel.r);
      for (auto& i : seq) i = rng.below(50);
      CHECK(ndtv::collides(p, seq, sel.ball));
    }
  }
  SUBCASE("at least half of random sequences collide") {
    ndtv::Rng rng(65);
    const auto p = oracle::uniform_points(200, 2, rng);
    const auto sel = ndtv::selection_ball(p, 0.5);
    const auto rows = oracle::rows_of(p);
    int hits = 0, agree = 0;
    const int trials = 5000;
    for (int t = 0; t < trials; ++t) {
      ndtv::IndexList seq(sel.r);
      oracle::Rows pts;
      for (auto& i : seq) {
        i = rng.below(200);
        pts.push_back(rows[i]);
      }
      const bool hit = ndtv::collides(p, seq, sel.ball);
      hits += hit;
      agree += hit == (oracle::hull_distance_2d(sel.ball.center, pts) <= sel.ball.radius + 1e-7);
    }
    CHECK(static_cast<double>(hits) / trials >= 0.5 - 0.03);
    CHECK(agree == trials);
  }
}

TEST_CASE("weak epsilon net") {
  SUBCASE("identical points need one ball") {
    const auto net = ndtv::weak_epsilon_net(copies(8, 2, 3.0), 0.5, 0.5);
    CHECK(net.balls.size() == 1);
    CHECK(net.r == 8);
    CHECK(net.size_cap == doctest::Approx(512.0));
  }
  SUBCASE("twelve points on a circle") {
    const auto p = circle(12);
    const auto net = ndtv::weak_epsilon_net(p, 0.5, 0.5);
    CHECK(net.balls.size() <= 512);
    CHECK(net.subset_size == 6);
    CHECK_FALSE(ndtv::find_uncovered_subset(p, 6, net.balls).has_value());
    // planar brute-force audit, independent of the iterative hull distance
    const auto rows = oracle::rows_of(p);
    int uncovered = 0;
    oracle::for_each_subset(12, 6, [&](const std::vector<std::size_t>& s) {
      oracle::Rows pts;
      for (std::size_t i : s) pts.push_back(rows[i]);
      bool hit = false;
      for (const auto& b : net.balls) {
        hit = hit || oracle::hull_distance_2d(b.center, pts) <= b.radius + 1e-9;
      }
      uncovered += !hit;
    });
    CHECK(uncovered == 0);
  }
  SUBCASE("parameter validation") {
    const auto p = circle(6);
    CHECK_THROWS_AS(ndtv::weak_epsilon_net(p, 0.5, 0.6), ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::weak_epsilon_net(circle(30), 0.5, 0.5), ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::weak_epsilon_net(p, 1.5, 0.5), ndtv::DomainError);
  }
}

TEST_CASE("approximate Caratheodory") {
  SUBCASE("vertex with all the weight") {
    ndtv::Rng rng(66);
    const auto p = oracle::gaussian_points(10, 3, rng);
    std::vector<double> w(10, 0.0);
    w[4] = 1.0;
    const auto res = ndtv::caratheodory_approx(as_vector(p.point(4)), p, w, 0.3, rng);
    CHECK(res.error == 0.0);
    CHECK(res.witness.support == ndtv::IndexList{4});
  }
  SUBCASE("two basis vectors, eps = 1/2") {
    ndtv::Rng rng(67);
    const auto p = PointSet::from_rows({{1, 0}, {0, 1}});
    const std::vector<double> w{0.5, 0.5}, target{0.5, 0.5};
    for (int t = 0; t < 50; ++t) {
      const auto res = ndtv::caratheodory_approx(target, p, w, 0.5, rng);
      CHECK(res.r == 2);
      const bool expected = std::abs(res.error) < 1e-15 || std::abs(res.error - std::sqrt(0.5)) < 1e-15;
      CHECK(expected);
      CHECK(res.error <= 0.5 * std::sqrt(2.0) + 1e-15);
    }
  }
  SUBCASE("uniform weights, eps = 0.2") {
    ndtv::Rng rng(68);
    for (int t = 0; t < 20; ++t) {
      const auto p = oracle::uniform_points(100, 5, rng);
      const std::vector<double> w(100, 0.01);
      const auto target = ndtv::centroid(p);
      const double diam = ndtv::diameter_exact(p);
      const auto res = ndtv::caratheodory_approx(target, p, w, 0.2, rng, diam);
      CHECK(res.r == 13);
      CHECK(res.error <= 0.2 * diam);
      CHECK(res.witness.support.size() <= 13);
      CHECK_FALSE(res.retry_exhausted);
      double total = 0.0;
      for (double x : res.witness.weights) total += x;
      CHECK(total == doctest::Approx(1.0));
    }
  }
  SUBCASE("invalid weights") {
    ndtv::Rng rng(69);
    const auto p = PointSet::from_rows({{1, 0}, {0, 1}});
    const std::vector<double> target{0.5, 0.5};
    CHECK_THROWS_AS(ndtv::caratheodory_approx(target, p, std::vector<double>{0.7, 0.7}, 0.3, rng),
                    ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::caratheodory_approx(target, p, std::vector<double>{1.5, -0.5}, 0.3, rng),
                    ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::caratheodory_approx(target, p, std::vector<double>{0.9, 0.1}, 0.3, rng),
                    ndtv::DomainError);
  }
}
