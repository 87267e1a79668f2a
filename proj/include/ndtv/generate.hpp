#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ndtv/core.hpp"

namespace ndtv {

enum class Distribution {
  uniform_cube,     // i.i.d. uniform in [0,1]^d
  gaussian,         // i.i.d. standard normal coordinates
  basis,            // e_1..e_d (n is forced to d)
  simplex_clusters, // d+1 tight clusters around 0, e_1..e_d, dealt round-robin
};

Distribution distribution_from_string(const std::string& name);
const char* to_string(Distribution kind);

/// Deterministic for a given seed. Throws DomainError for n == 0 or d == 0.
PointSet generate_points(Distribution kind, std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace ndtv
