#include "ndtv/generate.hpp"

#include "ndtv/random.hpp"

namespace ndtv {

Distribution distribution_from_string(const std::string& name) {
  if (name == "uniform-cube") return Distribution::uniform_cube;
  if (name == "gaussian") return Distribution::gaussian;
  if (name == "basis") return Distribution::basis;
  if (name == "simplex-clusters") return Distribution::simplex_clusters;
  throw DomainError("unknown distribution '" + name +
                    "' (expected uniform-cube, gaussian, basis or simplex-clusters)");
}

const char* to_string(Distribution kind) {
  switch (kind) {
    case Distribution::uniform_cube:
      return "uniform-cube";
    case Distribution::gaussian:
      return "gaussian";
    case Distribution::basis:
      return "basis";
    case Distribution::simplex_clusters:
      return "simplex-clusters";
  }
  return "unknown";
}

PointSet generate_points(Distribution kind, std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0) throw DomainError("dimension must be at least 1");
  if (kind == Distribution::basis) n = d;
  if (n == 0) throw DomainError("cannot generate an empty point set");
  Rng rng(seed);
  std::vector<double> coords(n * d, 0.0);
  switch (kind) {
    case Distribution::uniform_cube:
      for (double& v : coords) v = rng.uniform();
      break;
    case Distribution::gaussian:
      for (double& v : coords) v = rng.normal();
      break;
    case Distribution::basis:
      for (std::size_t i = 0; i < d; ++i) coords[i * d + i] = 1.0;
      break;
    case Distribution::simplex_clusters:
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t cluster = i % (d + 1);  // 0 is the origin, c > 0 is e_c
        for (std::size_t k = 0; k < d; ++k) coords[i * d + k] = 0.01 * rng.normal();
        if (cluster > 0) coords[i * d + cluster - 1] += 1.0;
      }
      break;
  }
  return PointSet(n, d, std::move(coords));
}

}  // namespace ndtv
