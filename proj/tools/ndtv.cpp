// ndtv: command-line front end for the no-dimensional Tverberg library.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 domain/precondition error, 4 I/O or parse error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndtv/applications.hpp"
#include "ndtv/bench.hpp"
#include "ndtv/generate.hpp"
#include "ndtv/halving.hpp"
#include "ndtv/io.hpp"
#include "ndtv/sampling.hpp"
#include "ndtv/tverberg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const std::string& algo) {
  if (!seed) throw UsageError("algorithm '" + algo + "' is randomized and needs --seed");
  return *seed;
}

double max_witness_distance(const ndtv::TverbergCertificate& cert) {
  double m = 0.0;
  for (const auto& w : cert.witnesses) m = std::max(m, ndtv::distance(w.point, cert.ball.center));
  return m;
}

void print_report(const ndtv::VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "  ok   " : "  FAIL ") << c.name << ": " << c.detail << '\n';
  }
}

ndtv::TverbergCertificate run_partition(const ndtv::PointSet& points, const std::string& algo,
                                        double eps, std::optional<std::uint64_t> seed,
                                        std::optional<double> diameter) {
  if (algo == "det") return ndtv::halving_tree_partition(points, eps, diameter).certificate;
  const std::uint64_t s = require_seed(seed, algo);
  ndtv::Rng rng(s);
  ndtv::TverbergCertificate cert;
  if (algo == "random") {
    cert = ndtv::tverberg_partition(points, eps, rng, diameter);
  } else if (algo == "fast") {
    cert = ndtv::tverberg_fast(points, eps, rng);
  } else {
    throw UsageError("unknown partition algorithm '" + algo + "'");
  }
  cert.trace.seed = s;
  return cert;
}

ndtv::SampleResult run_sample(const ndtv::PointSet& points, const std::string& algo,
                              std::size_t r, std::optional<std::uint64_t> seed) {
  if (algo == "sample-slow") return ndtv::derand_sample_slow(points, r);
  if (algo == "sample-fast") return ndtv::derand_sample_fast(points, r);
  if (algo == "sample-halving") return ndtv::derand_sample_by_halving(points, r);
  ndtv::Rng rng(require_seed(seed, algo));
  if (algo == "sample-random") return ndtv::sample_mean_without_replacement(points, r, rng);
  if (algo == "sample-replace") return ndtv::sample_mean_with_replacement(points, r, rng);
  throw UsageError("unknown sampling algorithm '" + algo + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"No-dimensional Tverberg partitions, centerballs and mean sampling"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic point set");
  std::string gen_kind = "uniform-cube", gen_out, gen_format;
  std::size_t gen_n = 0, gen_d = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--kind", gen_kind, "uniform-cube | gaussian | basis | simplex-clusters")
      ->check(CLI::IsMember({"uniform-cube", "gaussian", "basis", "simplex-clusters"}));
  auto* gen_n_opt = gen->add_option("-n,--n", gen_n, "Number of points (ignored for basis)")
                        ->check(CLI::PositiveNumber);
  gen->add_option("-d,--d", gen_d, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed")->required();
  gen->add_option("-o,--out", gen_out, "Output path")->required();
  gen->add_option("--format", gen_format, "csv | bin (default: from extension)")
      ->check(CLI::IsMember({"csv", "bin"}));

  // partition
  auto* part = app.add_subcommand("partition", "Compute and certify a Tverberg partition");
  std::string part_points, part_out, part_algo = "random";
  double part_eps = 0.2, part_tol = 1e-7;
  std::optional<std::uint64_t> part_seed;
  std::optional<double> part_diameter;
  part->add_option("-p,--points", part_points, "Point file")->required();
  part->add_option("-o,--out", part_out, "Certificate output path");
  part->add_option("--algo", part_algo, "random | fast | det")
      ->check(CLI::IsMember({"random", "fast", "det"}));
  part->add_option("--eps", part_eps, "Accuracy parameter");
  part->add_option("--seed", part_seed, "Random seed (random, fast)");
  part->add_option("--diameter", part_diameter, "Known diameter (upper bound) of the points");
  part->add_option("--tol", part_tol, "Verification tolerance");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a certificate against a point file");
  std::string ver_points, ver_cert;
  double ver_tol = 1e-7;
  ver->add_option("-p,--points", ver_points, "Point file")->required();
  ver->add_option("-c,--cert", ver_cert, "Certificate file")->required();
  ver->add_option("--tol", ver_tol, "Tolerance");

  // sample
  auto* smp = app.add_subcommand("sample", "Pick r points whose centroid is near c(P)");
  std::string smp_points, smp_algo = "sample-fast";
  std::size_t smp_r = 0;
  std::optional<std::uint64_t> smp_seed;
  smp->add_option("-p,--points", smp_points, "Point file")->required();
  smp->add_option("--algo", smp_algo,
                  "sample-fast | sample-slow | sample-halving | sample-random | sample-replace")
      ->check(CLI::IsMember(
          {"sample-fast", "sample-slow", "sample-halving", "sample-random", "sample-replace"}));
  smp->add_option("-r,--r,--target", smp_r, "Sample size (target for sample-halving)")
      ->required()
      ->check(CLI::PositiveNumber);
  smp->add_option("--seed", smp_seed, "Random seed (randomized modes)");

  // halve
  auto* hlv = app.add_subcommand("halve", "Split an even point set into two close halves");
  std::string hlv_points, hlv_algo = "det";
  double hlv_xi = 0.5;
  std::optional<std::uint64_t> hlv_seed;
  hlv->add_option("-p,--points", hlv_points, "Point file")->required();
  hlv->add_option("--algo", hlv_algo, "det | random | retry")
      ->check(CLI::IsMember({"det", "random", "retry"}));
  hlv->add_option("--xi", hlv_xi, "Slack for the retrying variant");
  hlv->add_option("--seed", hlv_seed, "Random seed (random, retry)");

  // centerball
  auto* cb = app.add_subcommand("centerball", "Ball whose every containing halfspace is deep");
  std::string cb_points, cb_out;
  double cb_eps = 0.2;
  bool cb_det = false;
  std::optional<std::uint64_t> cb_seed;
  std::size_t cb_angles = 0;
  cb->add_option("-p,--points", cb_points, "Point file")->required();
  cb->add_option("--eps", cb_eps, "Radius parameter");
  cb->add_flag("--det", cb_det, "Use the deterministic halving-tree backend");
  cb->add_option("--seed", cb_seed, "Random seed (randomized backend)");
  cb->add_option("-o,--out", cb_out, "Certificate output path");
  cb->add_option("--angles", cb_angles, "Run the 2D halfspace probe with this many directions");

  // weaknet
  auto* wn = app.add_subcommand("weaknet", "Weak eps-net of balls (small n only)");
  std::string wn_points;
  double wn_frac = 0.5, wn_rad = 0.5;
  std::size_t wn_nmax = 24;
  wn->add_option("-p,--points", wn_points, "Point file")->required();
  wn->add_option("--eps-frac", wn_frac, "Mass fraction eps");
  wn->add_option("--eps-rad", wn_rad, "Radius parameter (2/eps_rad^2 integral)");
  wn->add_option("--n-max", wn_nmax, "Largest n accepted");

  // caratheodory
  auto* car = app.add_subcommand("caratheodory", "Sparse approximation of a convex combination");
  std::string car_points, car_weights;
  double car_eps = 0.2;
  std::optional<std::uint64_t> car_seed;
  car->add_option("-p,--points", car_points, "Point file")->required();
  car->add_option("-w,--weights", car_weights, "Weights file (one point-file row; default uniform)");
  car->add_option("--eps", car_eps, "Accuracy parameter");
  car->add_option("--seed", car_seed, "Random seed")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Time an algorithm over growing n (CSV to stdout)");
  std::vector<std::size_t> bench_ns;
  std::size_t bench_d = 32, bench_repeats = 3;
  double bench_eps = 0.3;
  std::string bench_algo = "sample-fast";
  std::uint64_t bench_seed = 1;
  bool bench_warm = false;
  bench->add_option("--n", bench_ns, "Comma-separated sizes")->required()->delimiter(',');
  bench->add_option("-d,--d", bench_d, "Dimension")->check(CLI::PositiveNumber);
  bench->add_option("--eps", bench_eps, "Accuracy parameter");
  bench->add_option("--algo", bench_algo,
                    "sample-fast | sample-slow | sample-halving | random | fast | det")
      ->check(CLI::IsMember(
          {"sample-fast", "sample-slow", "sample-halving", "random", "fast", "det"}));
  bench->add_option("--repeats", bench_repeats, "Timed repetitions per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_flag("--warm", bench_warm, "Skip the cache eviction before each timed run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      if (gen_kind != "basis" && !*gen_n_opt) throw UsageError("--n is required for " + gen_kind);
      const auto kind = ndtv::distribution_from_string(gen_kind);
      const auto pts = ndtv::generate_points(kind, gen_n, gen_d, gen_seed);
      const auto format = gen_format.empty() ? ndtv::io::format_for_path(gen_out)
                          : gen_format == "bin" ? ndtv::io::PointFormat::bin
                                                : ndtv::io::PointFormat::csv;
      ndtv::io::save_points(gen_out, pts, format);
      std::cout << "wrote " << pts.size() << " points in d=" << pts.dim() << " to " << gen_out
                << '\n';
      return kExitOk;
    }

    if (*part) {
      const auto pts = ndtv::io::load_points(part_points);
      const auto start = Clock::now();
      const auto cert = run_partition(pts, part_algo, part_eps, part_seed, part_diameter);
      const double elapsed = seconds_since(start);
      if (!part_out.empty()) ndtv::io::save_certificate(part_out, cert);
      const auto report = ndtv::verify_certificate(pts, cert, part_tol);
      std::printf("algo=%s n=%zu d=%zu eps=%g k=%zu max_size=%zu radius=%.17g "
                  "max_witness_dist=%.17g rounds=%zu time_s=%.6f verify=%s\n",
                  part_algo.c_str(), pts.size(), pts.dim(), part_eps, cert.groups.size(),
                  cert.max_group_size(), cert.ball.radius, max_witness_distance(cert),
                  cert.trace.rounds, elapsed, report.passed ? "pass" : "FAIL");
      if (!report.passed) {
        print_report(report);
        return kExitVerify;
      }
      return kExitOk;
    }

    if (*ver) {
      const auto pts = ndtv::io::load_points(ver_points);
      const auto cert = ndtv::io::load_certificate(ver_cert);
      const auto report = ndtv::verify_certificate(pts, cert, ver_tol);
      print_report(report);
      if (const auto* bad = report.first_failure()) {
        std::cout << "verification FAILED at check '" << bad->name << "'\n";
        return kExitVerify;
      }
      std::cout << "verification passed\n";
      return kExitOk;
    }

    if (*smp) {
      const auto pts = ndtv::io::load_points(smp_points);
      const auto start = Clock::now();
      const auto res = run_sample(pts, smp_algo, smp_r, smp_seed);
      const double elapsed = seconds_since(start);
      std::printf("algo=%s n=%zu size=%zu centroid_dist=%.17g bound=%.17g time_s=%.6f\n",
                  smp_algo.c_str(), pts.size(), res.indices.size(), res.centroid_dist, res.bound,
                  elapsed);
      std::cout << "indices=";
      for (std::size_t i = 0; i < res.indices.size(); ++i) {
        std::cout << (i ? "," : "") << res.indices[i];
      }
      std::cout << '\n';
      return kExitOk;
    }

    if (*hlv) {
      const auto pts = ndtv::io::load_points(hlv_points);
      ndtv::HalvingResult res;
      if (hlv_algo == "det") {
        res = ndtv::derand_halving(pts);
      } else {
        ndtv::Rng rng(require_seed(hlv_seed, hlv_algo));
        res = hlv_algo == "random" ? ndtv::random_halving(pts, rng)
                                   : ndtv::random_halving_retry(pts, hlv_xi, rng);
      }
      std::printf("algo=%s n=%zu centroid_dist=%.17g rounds=%zu\n", hlv_algo.c_str(), pts.size(),
                  res.centroid_dist, res.rounds);
      std::cout << "first=";
      for (std::size_t i = 0; i < res.first.size(); ++i) std::cout << (i ? "," : "") << res.first[i];
      std::cout << '\n';
      return kExitOk;
    }

    if (*cb) {
      const auto pts = ndtv::io::load_points(cb_points);
      std::optional<ndtv::Rng> rng;
      if (!cb_det) rng.emplace(require_seed(cb_seed, "centerball"));
      ndtv::Rng unused(0);
      auto res = ndtv::centerball(pts, cb_eps, rng ? *rng : unused, cb_det);
      if (cb_seed) res.certificate.trace.seed = *cb_seed;
      if (!cb_out.empty()) ndtv::io::save_certificate(cb_out, res.certificate);
      const auto report = ndtv::verify_certificate(pts, res.certificate);
      std::printf("radius=%.17g depth_lower_bound=%zu verify=%s\n", res.ball.radius,
                  res.depth_lower_bound, report.passed ? "pass" : "FAIL");
      std::cout << "center=";
      for (std::size_t k = 0; k < res.ball.center.size(); ++k) {
        std::printf("%s%.17g", k ? "," : "", res.ball.center[k]);
      }
      std::cout << '\n';
      if (cb_angles > 0) {
        const auto probe = ndtv::halfspace_depth_check_2d(pts, res.ball, cb_angles);
        std::printf("probe_min_depth=%zu\n", probe);
        if (probe < res.depth_lower_bound) return kExitVerify;
      }
      return report.passed ? kExitOk : kExitVerify;
    }

    if (*wn) {
      const auto pts = ndtv::io::load_points(wn_points);
      const auto net = ndtv::weak_epsilon_net(pts, wn_frac, wn_rad, wn_nmax);
      std::printf("balls=%zu cap=%.17g r=%zu subset_size=%zu radius=%.17g\n", net.balls.size(),
                  net.size_cap, net.r, net.subset_size, net.eps_rad * net.diameter);
      for (const auto& b : net.balls) {
        for (std::size_t k = 0; k < b.center.size(); ++k) {
          std::printf("%s%.17g", k ? "," : "", b.center[k]);
        }
        std::printf("\n");
      }
      return kExitOk;
    }

    if (*car) {
      const auto pts = ndtv::io::load_points(car_points);
      std::vector<double> weights(pts.size(), 1.0 / static_cast<double>(pts.size()));
      if (!car_weights.empty()) {
        const auto w = ndtv::io::load_points(car_weights);
        if (w.size() * w.dim() != pts.size()) {
          throw ndtv::DomainError("weights file must hold one weight per point");
        }
        weights.assign(w.coords().begin(), w.coords().end());
      }
      ndtv::IndexList all(pts.size());
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
      const auto target = ndtv::combine(pts, all, weights);
      ndtv::Rng rng(*car_seed);
      const auto res = ndtv::caratheodory_approx(target, pts, weights, car_eps, rng);
      std::printf("r=%zu support=%zu error=%.17g bound=%.17g iterations=%zu exhausted=%s\n",
                  res.r, res.witness.support.size(), res.error, res.bound, res.iterations,
                  res.retry_exhausted ? "yes" : "no");
      return kExitOk;
    }

    if (*bench) {
      const auto rows =
          ndtv::run_bench(bench_ns, bench_d, bench_eps, bench_algo, bench_repeats,
                          bench_seed, !bench_warm);
      std::cout << "n,d,algo,median_seconds,k,max_size\n";
      for (const auto& row : rows) {
        std::printf("%zu,%zu,%s,%.6f,%zu,%zu\n", row.n, row.d, row.algo.c_str(),
                    row.median_seconds, row.k, row.max_size);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ndtv::io::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ndtv::DomainError& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
