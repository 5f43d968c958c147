#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "relicut/parallel.hpp"
#include "relicut/random.hpp"

namespace relicut::detail {

struct MonteCarloPlan {
  double epsilon = 0.05;
  double eta = 0.01;
  /// Known lower bound on the success probability of one trial.
  double lower_bound = 1.0;
  std::uint64_t seed = 0;
  Stream stream = Stream::monte_carlo;
  unsigned threads = 0;
};

struct MonteCarloResult {
  double value = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  bool capped = false;
};

inline constexpr std::uint64_t kTrialsPerChunk = 4096;

/// Hits needed by the stopping rule of Dagum, Karp, Luby and Ross:
/// 1 + 4(e-2)(1+eps) ln(2/eta) / eps^2.
inline std::uint64_t stopping_hits(double epsilon, double eta) {
  const double upsilon = 4.0 * (std::exp(1.0) - 2.0) * std::log(2.0 / eta) / (epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(1.0 + (1.0 + epsilon) * upsilon));
}

/// Fixed sample size that suffices when the mean is at least `lower_bound`
/// (multiplicative Chernoff): 3 ln(2/eta) / (eps^2 L).
inline std::uint64_t capped_trials(double epsilon, double eta, double lower_bound) {
  const double n = std::ceil(3.0 * std::log(2.0 / eta) / (epsilon * epsilon * lower_bound));
  return static_cast<std::uint64_t>(std::min(n, 1e18));
}

/// Bernoulli estimation with the stopping rule, capped at the fixed
/// Chernoff sample size. Each half gets eta/2, so the output is within
/// (1 +- eps) of the mean with probability >= 1 - eta.
///
/// make_trial() returns a per-worker callable bool(Rng&). Trials are grouped
/// into fixed chunks with their own streams and decided in chunk order, so the
/// result does not depend on the thread count.
template <class MakeTrial>
MonteCarloResult run_monte_carlo(const MonteCarloPlan& plan, MakeTrial&& make_trial) {
  const double half_eta = plan.eta / 2.0;
  const std::uint64_t target = stopping_hits(plan.epsilon, half_eta);
  const std::uint64_t cap = capped_trials(plan.epsilon, half_eta, plan.lower_bound);
  const std::uint64_t chunk_count = (cap + kTrialsPerChunk - 1) / kTrialsPerChunk;
  const unsigned workers = thread_count(plan.threads);

  auto chunk_size = [&](std::uint64_t c) { return std::min(kTrialsPerChunk, cap - c * kTrialsPerChunk); };

  MonteCarloResult result;
  std::uint64_t next_chunk = 0;
  while (next_chunk < chunk_count) {
    const std::uint64_t wave = std::min<std::uint64_t>(workers, chunk_count - next_chunk);
    std::vector<std::uint64_t> hits(wave, 0);
    parallel_for(wave, workers, [&](std::size_t i) {
      auto trial = make_trial();
      Rng rng(plan.seed, plan.stream, next_chunk + i);
      const std::uint64_t size = chunk_size(next_chunk + i);
      std::uint64_t local = 0;
      for (std::uint64_t t = 0; t < size; ++t) local += trial(rng) ? 1 : 0;
      hits[i] = local;
    });
    for (std::uint64_t i = 0; i < wave; ++i) {
      const std::uint64_t c = next_chunk + i;
      if (result.hits + hits[i] >= target) {
        // Replay the chunk to find the exact trial that reached the target.
        auto trial = make_trial();
        Rng rng(plan.seed, plan.stream, c);
        std::uint64_t t = 0;
        while (result.hits < target) {
          result.hits += trial(rng) ? 1 : 0;
          ++t;
        }
        result.trials += t;
        result.value = static_cast<double>(target) / static_cast<double>(result.trials);
        return result;
      }
      result.hits += hits[i];
      result.trials += chunk_size(c);
    }
    next_chunk += wave;
  }
  result.capped = true;
  result.value = static_cast<double>(result.hits) / static_cast<double>(result.trials);
  return result;
}

}  // namespace relicut::detail
