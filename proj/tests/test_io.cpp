#include <doctest.h>

#include <cstring>
#include <sstream>

#include "ndtv/generate.hpp"
#include "ndtv/io.hpp"
#include "ndtv/tverberg.hpp"
#include "oracles.hpp"

using ndtv::PointSet;
namespace io = ndtv::io;

namespace {

bool bit_equal(const PointSet& a, const PointSet& b) {
  return a.size() == b.size() && a.dim() == b.dim() &&
         std::memcmp(a.coords().data(), b.coords().data(), a.coords().size_bytes()) == 0;
}

}  // namespace

TEST_CASE("csv round trip is exact") {
  ndtv::Rng rng(71);
  auto p = oracle::gaussian_points(200, 5, rng);
  std::vector<double> c(p.coords().begin(), p.coords().end());
  c[0] = 1e-300;
  c[1] = -123456789.123456789;
  c[2] = 0.1;
  p = PointSet(200, 5, c);
  std::stringstream ss;
  io::write_points_csv(ss, p);
  CHECK(bit_equal(io::read_points_csv(ss), p));
}

TEST_CASE("csv reader") {
  std::istringstream in("# header\n1,2\n\n3,4.5\n");
  const auto p = io::read_points_csv(in);
  CHECK(p.size() == 2);
  CHECK(p.point(1)[1] == 4.5);
  std::istringstream ragged("1,2\n3\n");
  CHECK_THROWS_AS(io::read_points_csv(ragged), io::IoError);
  std::istringstream junk("1,x\n");
  CHECK_THROWS_AS(io::read_points_csv(junk), io::IoError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(io::read_points_csv(empty), io::IoError);
}

TEST_CASE("binary round trip is bit exact") {
  ndtv::Rng rng(72);
  const auto p = oracle::gaussian_points(123, 7, rng);
  std::stringstream ss;
  io::write_points_bin(ss, p);
  const std::string bytes = ss.str();
  CHECK(bytes.substr(0, 4) == "NDTV");
  CHECK(bytes.size() == 4 + 4 + 8 + 8 + 123 * 7 * 8);
  CHECK(bit_equal(io::read_points_bin(ss), p));
  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  CHECK_THROWS_AS(io::read_points_bin(truncated), io::IoError);
  std::istringstream wrong("NOPE0000000000000000");
  CHECK_THROWS_AS(io::read_points_bin(wrong), io::IoError);
}

TEST_CASE("certificate documents round trip") {
  ndtv::Rng rng(73);
  const auto p = oracle::uniform_points(3000, 3, rng);
  auto cert = ndtv::tverberg_partition(p, 0.35, rng);
  cert.trace.seed = 18446744073709551615ull;
  const std::string text = io::certificate_to_json(cert);
  const auto back = io::certificate_from_json(text);
  CHECK(io::certificate_to_json(back) == text);
  CHECK(back.groups == cert.groups);
  CHECK(back.ball.radius == cert.ball.radius);
  CHECK(back.ball.center == cert.ball.center);
  CHECK(back.radius_basis == cert.radius_basis);
  CHECK(back.trace.seed == cert.trace.seed);
  CHECK(back.trace.algo == "random");
  CHECK(ndtv::verify_certificate(p, back).passed);

  CHECK_THROWS_AS(io::certificate_from_json("{not json"), io::IoError);
  CHECK_THROWS_AS(io::certificate_from_json("{\"format\": \"other\"}"), io::IoError);
  CHECK_THROWS_AS(io::certificate_from_json("[]"), io::IoError);
}

TEST_CASE("generators") {
  SUBCASE("basis") {
    const auto p = ndtv::generate_points(ndtv::Distribution::basis, 0, 6, 1);
    CHECK(p.size() == 6);
    CHECK(ndtv::diameter_exact(p) == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("deterministic per seed") {
    for (auto kind : {ndtv::Distribution::uniform_cube, ndtv::Distribution::gaussian,
                      ndtv::Distribution::simplex_clusters}) {
      const auto a = ndtv::generate_points(kind, 1000, 4, 1);
      const auto b = ndtv::generate_points(kind, 1000, 4, 1);
      const auto c = ndtv::generate_points(kind, 1000, 4, 2);
      CHECK(bit_equal(a, b));
      CHECK_FALSE(bit_equal(a, c));
    }
  }
  SUBCASE("uniform cube stays in the cube") {
    const auto p = ndtv::generate_points(ndtv::Distribution::uniform_cube, 500, 3, 9);
    for (double v : p.coords()) CHECK((v >= 0.0 && v < 1.0));
  }
  SUBCASE("simplex clusters sit near the vertices") {
    const auto p = ndtv::generate_points(ndtv::Distribution::simplex_clusters, 40, 3, 9);
    for (std::size_t i = 0; i < 40; ++i) {
      std::vector<double> vertex(3, 0.0);
      if (i % 4 != 0) vertex[i % 4 - 1] = 1.0;
      CHECK(oracle::dist(vertex, {p.point(i).begin(), p.point(i).end()}) < 0.1);
    }
  }
  SUBCASE("names and bad input") {
    CHECK(ndtv::distribution_from_string("gaussian") == ndtv::Distribution::gaussian);
    CHECK(std::string(ndtv::to_string(ndtv::Distribution::simplex_clusters)) == "simplex-clusters");
    CHECK_THROWS_AS(ndtv::distribution_from_string("torus"), ndtv::DomainError);
    CHECK_THROWS_AS(ndtv::generate_points(ndtv::Distribution::uniform_cube, 0, 3, 1),
                    ndtv::DomainError);
  }
}
