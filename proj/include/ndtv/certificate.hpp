#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ndtv/core.hpp"

namespace ndtv {

/// What the certificate radius is measured against.
enum class RadiusBasis {
  avg_price,       // radius = eps * avgp(P)
  diameter,        // radius = eps * diam(P), exact diameter supplied
  diameter_bound,  // radius = eps * (2 max_p |p - c(P)|)
};

const char* to_string(RadiusBasis basis);
RadiusBasis radius_basis_from_string(const std::string& text);

/// Bounds the producing algorithm promises; checked by the verifier.
struct CertificateClaims {
  double size_cap = 0.0;    // every |P_i| <= size_cap
  double min_groups = 0.0;  // k >= min_groups
};

struct CertificateTrace {
  std::string algo;
  std::uint64_t seed = 0;
  std::size_t rounds = 0;
  std::size_t bad_count = 0;
};

/// Partition of P into groups whose hulls all meet `ball`, with one
/// convex-combination witness per group (support given as global indices).
struct TverbergCertificate {
  std::size_t dimension = 0;
  std::size_t n = 0;
  double eps = 0.0;
  RadiusBasis radius_basis = RadiusBasis::avg_price;
  Ball ball;
  std::vector<IndexList> groups;
  std::vector<HullWitness> witnesses;
  CertificateClaims claims;
  CertificateTrace trace;

  std::size_t max_group_size() const;
};

}  // namespace ndtv
