#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace ndtv {

/// Seeded random stream with a platform-independent output sequence.
///
/// The engine is std::mt19937_64, whose output is fixed by the standard.
/// Integer and real variates are derived here rather than through the
/// standard distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box-Muller, one value per call).
  double normal();

  bool coin() { return (engine_() >> 63) != 0; }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ndtv
