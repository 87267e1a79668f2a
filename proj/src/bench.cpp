#include "ndtv/bench.hpp"

#include <algorithm>
#include <chrono>
#include <unistd.h>

#include "ndtv/core.hpp"
#include "ndtv/generate.hpp"
#include "ndtv/halving.hpp"
#include "ndtv/sampling.hpp"
#include "ndtv/tverberg.hpp"

namespace ndtv {

namespace {

constexpr const char* kAlgos[] = {"sample-fast", "sample-slow", "sample-halving",
                                  "random",      "fast",        "det"};

// Streams through a buffer twice the size of the last-level cache.
void evict_caches() {
  static std::vector<unsigned char> buffer = [] {
    long llc = -1;
#ifdef _SC_LEVEL3_CACHE_SIZE
    llc = sysconf(_SC_LEVEL3_CACHE_SIZE);
#endif
    const std::size_t bytes = llc > 0 ? static_cast<std::size_t>(llc) : std::size_t{64} << 20;
    return std::vector<unsigned char>(std::clamp(2 * bytes, std::size_t{64} << 20,
                                                 std::size_t{1} << 30));
  }();
  static unsigned char salt = 0;
  ++salt;
  for (std::size_t i = 0; i < buffer.size(); i += 64) buffer[i] += salt;
  volatile unsigned char sink = buffer[buffer.size() / 2];
  (void)sink;
}

}  // namespace

bool is_bench_algo(const std::string& algo) {
  return std::find(std::begin(kAlgos), std::end(kAlgos), algo) != std::end(kAlgos);
}

std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t d, double eps,
                                const std::string& algo, std::size_t repeats, std::uint64_t seed,
                                bool cold_cache) {
  if (!is_bench_algo(algo)) throw DomainError("unknown bench algorithm '" + algo + "'");
  if (repeats == 0) throw DomainError("repeats must be positive");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");

  // Repeats are interleaved across sizes, so a slow phase of the machine
  // lands on every size rather than on one size's whole batch.
  std::vector<PointSet> inputs;
  std::vector<BenchRow> rows;
  std::vector<std::vector<double>> times(sizes.size());
  for (std::size_t n : sizes) {
    inputs.push_back(generate_points(Distribution::uniform_cube, n, d, seed));
    rows.push_back({n, d, algo, 0.0, 0, 0});
  }
  for (std::size_t rep = 0; rep < repeats; ++rep) {
    for (std::size_t s = 0; s < sizes.size(); ++s) {
      const PointSet& pts = inputs[s];
      const std::size_t n = sizes[s];
      BenchRow& row = rows[s];
      if (cold_cache) evict_caches();
      const auto start = std::chrono::steady_clock::now();
      if (algo.rfind("sample-", 0) == 0) {
        const auto r = std::min<std::size_t>(
            n, static_cast<std::size_t>(ceil_tolerant(1.0 / (eps * eps))));
        SampleResult res = algo == "sample-fast"   ? derand_sample_fast(pts, r)
                           : algo == "sample-slow" ? derand_sample_slow(pts, r)
                                                   : derand_sample_by_halving(pts, r);
        row.k = 1;
        row.max_size = res.indices.size();
      } else {
        TverbergCertificate cert;
        if (algo == "det") {
          cert = halving_tree_partition(pts, eps).certificate;
        } else {
          Rng rng(seed + rep);
          cert = algo == "random" ? tverberg_partition(pts, eps, rng) : tverberg_fast(pts, eps, rng);
        }
        row.k = cert.groups.size();
        row.max_size = cert.max_group_size();
      }
      times[s].push_back(
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
  }
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    std::sort(times[s].begin(), times[s].end());
    rows[s].median_seconds = times[s][times[s].size() / 2];
  }
  return rows;
}

}  // namespace ndtv
