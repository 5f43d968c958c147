#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>

#include "relicut/digraph.hpp"
#include "relicut/multigraph.hpp"

namespace relicut {

enum class Method { monte_carlo, cut_enum_dnf, exact_oracle, heuristic_sum, pas_incl_excl };
std::string_view method_name(Method m);

/// Which estimation path to take; `automatic` applies the regime test.
enum class Branch { automatic, monte_carlo, cut_enum };

struct Diagnostics {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  std::size_t n = 0;
  std::size_t m = 0;
  /// Unweighted value of the relevant minimum cut (edge or arc count).
  double min_cut = kUnset;
  /// The same cut under weights ln(1/p_e).
  double weighted_min_cut = kUnset;
  /// ln of the regime quantity: p^c, exp(-c_hat), or the analogous lower
  /// bound on the failure probability.
  double log_p_c = kUnset;
  double delta = kUnset;
  double alpha = kUnset;
  std::uint64_t cuts = 0;
  /// Monte Carlo trials or DNF samples.
  std::uint64_t trials = 0;
  double wall_ms = kUnset;
};

struct Estimate {
  double value = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  Method method = Method::monte_carlo;
  std::uint64_t seed = 0;
  Diagnostics diagnostics;
  /// Absolute error bound for deterministic methods.
  std::optional<double> certified_error_bound;
};

struct EstimateOptions {
  double epsilon = 0.05;
  double eta = 0.01;
  std::uint64_t seed = 0;
  /// Refuse (RegimeError) when the tail analysis needs a larger alpha.
  double alpha_cap = 3.0;
  /// Enumeration slack for floating-point ties (see EnumerationOptions).
  double slack = 1.05;
  Branch branch = Branch::automatic;
  unsigned threads = 0;
};

struct RegimeDecision {
  double log_p_c = 0.0;
  double log_threshold = 0.0;
  /// log_p_c >= log_threshold.
  bool monte_carlo = true;
};

/// Pure regime test in log space.
RegimeDecision decide_regime(double log_p_c, double log_threshold);

/// Smallest alpha >= 1 with (1 + 2/delta) N^{-alpha delta} <= target, the
/// tail bound on cuts above alpha times the minimum. `log_count_base` is
/// ln N (ln n for 2-way cuts, (r-1) ln(rn) for r-way).
double tail_alpha(double delta, double log_count_base, double log_target);

/// FAIL(p): probability the graph disconnects. Monte Carlo when
/// exp(-c_hat) >= n^{-4}, else alpha-minimum cut enumeration plus DNF
/// counting. n = 1 gives 0, a disconnected graph 1, exactly.
Estimate estimate_fail(const Multigraph& g, const EstimateOptions& options = {});
Estimate estimate_fail_monte_carlo(const Multigraph& g, const EstimateOptions& options = {});
/// Throws RegimeError if exp(-c_hat) >= n^{-4} or alpha exceeds the cap.
/// Branch::cut_enum through estimate_fail only needs exp(-c_hat) < n^{-2}.
Estimate estimate_fail_small(const Multigraph& g, const EstimateOptions& options = {});

/// Probability that the terminals stop being mutually connected.
/// Terminals are 0-indexed. Throws InputError on fewer than 2 terminals or
/// an id out of range.
Estimate estimate_multiterminal(const Multigraph& g, std::span<const VertexId> terminals,
                                const EstimateOptions& options = {});

/// Probability that the surviving graph is not k-edge-connected. Returns 1
/// exactly when the min cut is below k. The enumeration branch needs a
/// uniform failure probability.
Estimate estimate_kconn_failure(const Multigraph& g, unsigned k, const EstimateOptions& options = {});

/// Probability that an Eulerian digraph stops being strongly connected.
/// Throws InputError on non-Eulerian input. The enumeration branch needs a
/// uniform failure probability.
Estimate estimate_eulerian_strong_failure(const Digraph& g, const EstimateOptions& options = {});

/// Probability that a uniformly random orientation is not strongly
/// connected.
Estimate estimate_orientation_failure(const Multigraph& g, const EstimateOptions& options = {});

/// s_r: probability of r or more components. Throws InputError if r < 2 or
/// r > n.
Estimate estimate_rway_failure(const Multigraph& g, unsigned r, const EstimateOptions& options = {});

}  // namespace relicut
