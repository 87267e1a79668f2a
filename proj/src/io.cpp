#include "ndtv/io.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace ndtv::io {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    std::memcpy(&v, b, sizeof(T));
    return v;
  }
}

template <typename T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v;
  if (!in.read(reinterpret_cast<char*>(&v), sizeof(T))) {
    throw IoError("binary point file truncated");
  }
  return to_little(v);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename Seq>
void write_array(std::ostringstream& os, const Seq& values) {
  os << '[';
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ", ";
    first = false;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(v)>>) {
      os << format_double(v);
    } else {
      os << v;
    }
  }
  os << ']';
}

}  // namespace

PointFormat format_for_path(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".bin") || ends_with(".ndtv") ? PointFormat::bin : PointFormat::csv;
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto p = points.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
  if (!out) throw IoError("failed writing CSV points");
}

PointSet read_points_csv(std::istream& in) {
  std::vector<double> coords;
  std::size_t d = 0, n = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t count = 0;
    std::string_view rest = body;
    while (true) {
      const auto comma = rest.find(',');
      const std::string field = trim(rest.substr(0, comma));
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + field + "'");
      }
      coords.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (d == 0) d = count;
    if (count != d) {
      throw IoError("line " + std::to_string(line_no) + ": expected " + std::to_string(d) +
                    " coordinates, found " + std::to_string(count));
    }
    ++n;
  }
  if (n == 0) throw IoError("point file holds no points");
  return PointSet(n, d, std::move(coords));
}

void write_points_bin(std::ostream& out, const PointSet& points) {
  out.write("NDTV", 4);
  put<std::uint32_t>(out, kBinaryVersion);
  put<std::uint64_t>(out, points.size());
  put<std::uint64_t>(out, points.dim());
  for (double v : points.coords()) put<double>(out, v);
  if (!out) throw IoError("failed writing binary points");
}

PointSet read_points_bin(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "NDTV", 4) != 0) {
    throw IoError("missing NDTV magic");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kBinaryVersion) throw IoError("unsupported NDTV version " + std::to_string(version));
  const auto n = get<std::uint64_t>(in);
  const auto d = get<std::uint64_t>(in);
  if (n == 0 || d == 0 || n > (std::uint64_t{1} << 40) / d) {
    throw IoError("implausible NDTV header n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
  std::vector<double> coords(n * d);
  for (double& v : coords) v = get<double>(in);
  return PointSet(n, d, std::move(coords));
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  char magic[4] = {};
  in.read(magic, 4);
  const bool binary = in.gcount() == 4 && std::memcmp(magic, "NDTV", 4) == 0;
  in.clear();
  in.seekg(0);
  return binary ? read_points_bin(in) : read_points_csv(in);
}

void save_points(const std::string& path, const PointSet& points, PointFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  if (format == PointFormat::bin) {
    write_points_bin(out, points);
  } else {
    write_points_csv(out, points);
  }
}

std::string certificate_to_json(const TverbergCertificate& cert) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"format\": \"ndtv-certificate\",\n";
  os << "  \"version\": 1,\n";
  os << "  \"dimension\": " << cert.dimension << ",\n";
  os << "  \"n\": " << cert.n << ",\n";
  os << "  \"eps\": " << format_double(cert.eps) << ",\n";
  os << "  \"radius_basis\": \"" << to_string(cert.radius_basis) << "\",\n";
  os << "  \"ball\": {\"center\": ";
  write_array(os, cert.ball.center);
  os << ", \"radius\": " << format_double(cert.ball.radius) << "},\n";
  os << "  \"claims\": {\"size_cap\": " << format_double(cert.claims.size_cap)
     << ", \"min_groups\": " << format_double(cert.claims.min_groups) << "},\n";
  os << "  \"groups\": [\n";
  for (std::size_t g = 0; g < cert.groups.size(); ++g) {
    os << "    ";
    write_array(os, cert.groups[g]);
    os << (g + 1 < cert.groups.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"witnesses\": [\n";
  for (std::size_t g = 0; g < cert.witnesses.size(); ++g) {
    const HullWitness& w = cert.witnesses[g];
    os << "    {\"support\": ";
    write_array(os, w.support);
    os << ", \"weights\": ";
    write_array(os, w.weights);
    os << ", \"point\": ";
    write_array(os, w.point);
    os << '}' << (g + 1 < cert.witnesses.size() ? ",\n" : "\n");
  }
  os << "  ],\n";
  os << "  \"trace\": {\"rounds\": " << cert.trace.rounds << ", \"bad_count\": "
     << cert.trace.bad_count << ", \"algo\": " << nlohmann::json(cert.trace.algo).dump()
     << ", \"seed\": " << cert.trace.seed << "}\n";
  os << "}\n";
  return os.str();
}

TverbergCertificate certificate_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("format", std::string{}) != "ndtv-certificate") {
      throw IoError("not an ndtv certificate document");
    }
    TverbergCertificate cert;
    cert.dimension = j.at("dimension").get<std::size_t>();
    cert.n = j.at("n").get<std::size_t>();
    cert.eps = j.at("eps").get<double>();
    cert.radius_basis = radius_basis_from_string(j.at("radius_basis").get<std::string>());
    cert.ball.center = j.at("ball").at("center").get<Vector>();
    cert.ball.radius = j.at("ball").at("radius").get<double>();
    cert.claims.size_cap = j.at("claims").at("size_cap").get<double>();
    cert.claims.min_groups = j.at("claims").at("min_groups").get<double>();
    cert.groups = j.at("groups").get<std::vector<IndexList>>();
    for (const auto& w : j.at("witnesses")) {
      HullWitness hw;
      hw.support = w.at("support").get<IndexList>();
      hw.weights = w.at("weights").get<std::vector<double>>();
      if (w.contains("point")) hw.point = w.at("point").get<Vector>();
      cert.witnesses.push_back(std::move(hw));
    }
    if (j.contains("trace")) {
      const auto& t = j.at("trace");
      cert.trace.rounds = t.value("rounds", std::size_t{0});
      cert.trace.bad_count = t.value("bad_count", std::size_t{0});
      cert.trace.algo = t.value("algo", std::string{});
      cert.trace.seed = t.value("seed", std::uint64_t{0});
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed certificate: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("malformed certificate: ") + e.what());
  }
}

TverbergCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return certificate_from_json(buf.str());
}

void save_certificate(const std::string& path, const TverbergCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << certificate_to_json(cert);
  if (!out) throw IoError("failed writing certificate to '" + path + "'");
}

}  // namespace ndtv::io
