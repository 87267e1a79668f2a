#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ndtv {

struct BenchRow {
  std::size_t n = 0;
  std::size_t d = 0;
  std::string algo;
  double median_seconds = 0.0;
  std::size_t k = 0;         // groups, or 1 for the samplers
  std::size_t max_size = 0;  // largest group, or the sample size
};

/// Names accepted by run_bench.
bool is_bench_algo(const std::string& algo);

/// Times `algo` on a seeded uniform-cube instance per size (generation is
/// not timed) and reports the median of `repeats` runs. Repeats are
/// interleaved across sizes. Samplers use
/// r = ceil(1 / eps^2); repeat i of a randomized partition uses seed + i.
/// With `cold_cache` the caches are evicted before every timed run, so each
/// size starts with its input in main memory rather than wherever the
/// generator happened to leave it.
std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, std::size_t d, double eps,
                                const std::string& algo, std::size_t repeats, std::uint64_t seed,
                                bool cold_cache = true);

}  // namespace ndtv
