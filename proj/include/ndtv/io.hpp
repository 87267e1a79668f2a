#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ndtv/certificate.hpp"
#include "ndtv/core.hpp"

namespace ndtv::io {

/// Unreadable file, malformed content or failed write.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PointFormat { csv, bin };

/// "bin" for *.bin / *.ndtv paths, "csv" otherwise.
PointFormat format_for_path(const std::string& path);

// CSV: one point per line, comma-separated decimal coordinates printed with
// 17 significant digits. Blank lines and lines starting with '#' are skipped.
void write_points_csv(std::ostream& out, const PointSet& points);
PointSet read_points_csv(std::istream& in);

// Binary: "NDTV", u32 version (1), u64 n, u64 d, n*d little-endian f64.
inline constexpr std::uint32_t kBinaryVersion = 1;
void write_points_bin(std::ostream& out, const PointSet& points);
PointSet read_points_bin(std::istream& in);

/// Reads either format, sniffing the "NDTV" magic.
PointSet load_points(const std::string& path);
void save_points(const std::string& path, const PointSet& points, PointFormat format);

/// Certificate document (JSON). Numbers are printed with 17 significant
/// digits; indices are 0-based.
std::string certificate_to_json(const TverbergCertificate& cert);
TverbergCertificate certificate_from_json(const std::string& text);

TverbergCertificate load_certificate(const std::string& path);
void save_certificate(const std::string& path, const TverbergCertificate& cert);

}  // namespace ndtv::io
