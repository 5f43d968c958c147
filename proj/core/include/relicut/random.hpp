#pragma once

#include <cstdint>
#include <random>

namespace relicut {

/// Stream tags keep the random sequences of different consumers of one seed
/// independent of each other.
enum class Stream : std::uint64_t {
  monte_carlo = 1,
  dnf_sampling = 2,
  cut_enumeration = 3,
  tail_estimation = 4,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for chunk `index` of `stream` under the user seed.
inline std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ static_cast<std::uint64_t>(stream)) ^ index);
}

/// Deterministic random source. Uniform variates are built from raw engine
/// output so sequences are identical across standard library implementations.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, Stream stream, std::uint64_t index)
      : engine_(derive_seed(seed, stream, index)) {}

  static constexpr result_type min() { return std::mt19937_64::min(); }
  static constexpr result_type max() { return std::mt19937_64::max(); }
  result_type operator()() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, n), n > 0 (rejection, no modulo bias).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace relicut
