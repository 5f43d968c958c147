#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relicut/multigraph.hpp"
#include "relicut/oracle.hpp"

namespace relicut {

/// A point of the Tutte plane. In the failure model each edge fails with
/// probability 1/y.
struct TuttePoint {
  double x = 1.0;
  double y = 2.0;

  double q() const { return (x - 1.0) * (y - 1.0); }
  double p_fail() const { return 1.0 / y; }
};

/// sign * exp(log_abs); sign 0 means the value is 0.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  static SignedLog from(double v);
};

struct TutteEstimate {
  /// T' = E[Q^{kappa-1}] = T (y-1)^{n-1} / y^m.
  double t_prime = 1.0;
  /// Certified |T' - t_prime| (leading approximation only).
  std::optional<double> t_prime_error_bound;
  SignedLog t;
  /// Delta T' = 1 - T' and Delta T = y^m/(y-1)^{n-1} Delta T'.
  std::optional<double> delta_t_prime;
  std::optional<SignedLog> delta_t;
  /// y^{-c} = n^{-(2 + delta)}, c the unweighted minimum cut.
  double delta = 0.0;
  /// Terms s_2..s_{r0-1} of the series were estimated.
  unsigned r0 = 0;
  /// s_hat[r] for r = 2..r0-1; entries below 2 unused.
  std::vector<double> s_hat;
  /// Dropped series tail bound relative to the target.
  double tail_bound = 0.0;
  std::string regime;
};

/// Exact T(G; x, y) by deletion-contraction. Throws BudgetError if m > 16.
double exact_tutte(const Multigraph& g, double x, double y);

/// y^m / (y-1)^{n-1} E[Q^{kappa-1}] over all 2^m failure patterns, edges
/// failing with probability 1/y. Needs y > 1 and m <= 16.
double exact_expectation_identity(const Multigraph& g, double x, double y);

/// E[Q^{kappa-1}] from exact per-count probabilities p[r].
double expectation_from_tail(const PartitionTail& tail, double q);
/// 1 + (Q - 1) sum_{r>=2} s_r Q^{r-2}.
double series_from_tail(const PartitionTail& tail, double q);

/// T' = 1 with the certified error |Q - 1| n^{-delta} / (1 - |Q| n^{-delta/2}).
/// Needs y > 1, delta > 1 and |Q| < n^{delta/4} / 4; throws RegimeError naming
/// the required minimum cut otherwise.
TutteEstimate approx_tutte_leading(const Multigraph& g, double x, double y);

/// Relative (epsilon, eta) estimate of Delta T through the series with s_r
/// estimated by the r-way failure estimators. Same regime as
/// approx_tutte_leading; for Q < 0 additionally refuses unless the terms
/// r >= 3 provably stay below s_2 / 4.
TutteEstimate estimate_delta_t(const Multigraph& g, double x, double y, double epsilon, double eta,
                               std::uint64_t seed, unsigned threads = 0);

}  // namespace relicut
