#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relicut/dnf.hpp"
#include "relicut/estimators.hpp"
#include "relicut/multigraph.hpp"

namespace relicut {

/// Certified absolute error of an inclusion-exclusion sum truncated at term
/// k (terms 1..k-1 kept).
struct TruncationCertificate {
  unsigned k = 2;
  double bound = 0.0;
  /// "tail-formula" (sum_u binom(u-2, k-2) * bound on Pr[S_u]) or
  /// "next-term" (the Bonferroni bound sigma_k), whichever was smaller;
  /// "exact" when k exceeds the number of events.
  std::string formula_source;
};

enum class CutSource {
  /// Exhaustive partition scan when n <= 10, contraction otherwise.
  automatic,
  exhaustive,
  contraction,
};

struct DetApproxOptions {
  double epsilon = 0.01;
  double alpha_cap = 3.0;
  CutSource cuts = CutSource::automatic;
  /// Used only by randomized cut enumeration.
  double eta = 0.01;
  std::uint64_t seed = 0;
  double slack = 1.05;
  /// Largest truncation point k tried by the PAS.
  unsigned max_terms = 16;
  /// Largest number of event subsets evaluated for one term.
  double max_subsets = 5e7;
  unsigned threads = 0;
};

struct DeterministicEstimate {
  /// certified_error_bound = certificate.bound + tail_bound.
  Estimate estimate;
  TruncationCertificate certificate;
  /// Bound on Pr[some cut above alpha c fails].
  double tail_bound = 0.0;
  /// sigma[j] = sum over j-subsets of the cut events of Pr[all fail];
  /// sigma[0] unused.
  std::vector<double> sigma;
};

/// Sum of the failure probabilities of the weak cuts. Needs
/// exp(-c_hat) < n^{-4}; throws RegimeError otherwise.
DeterministicEstimate heuristic_sum_fail(const Multigraph& g, const DetApproxOptions& options = {});

/// Inclusion-exclusion over the weak-cut failure events, truncated at the
/// first k whose certificate is at most (eps/2) max(exp(-c_hat), sigma_1 -
/// sigma_2), both lower bounds on FAIL. Needs
/// exp(-c_hat) < n^{-2}. Throws BudgetError when k would exceed max_terms
/// or a term needs more than max_subsets intersections.
DeterministicEstimate pas_fail(const Multigraph& g, const DetApproxOptions& options = {});

/// Upper bound on Pr[at least u weak cuts fail] for exp(-c_hat) = n^{-(2+delta)}:
/// n^{-r delta / 2}, r the fewest components u distinct alpha-minimum cuts
/// can fail with; 0 when r > n.
double weak_cut_exceedance_bound(std::size_t n, double delta, double alpha, std::uint64_t u);

struct TruncationCheck {
  /// sum_{j<k} (-1)^{j+1} sigma_j
  double truncated = 0.0;
  double exact_union = 0.0;
  /// |truncated - exact_union|
  double error = 0.0;
  /// sum_u binom(u-2, k-2) Pr[S_u], Pr[S_u] exact.
  double lemma_bound = 0.0;
};

/// Both sides of the truncation lemma, by exhaustive enumeration, for the
/// clauses of `events` as events. Needs k >= 2 and at most 20 variables.
TruncationCheck truncation_error_exact(const DnfFormula& events, unsigned k);

/// sigma_1..sigma_upto of inclusion-exclusion over the clauses (index 0
/// unused). Intersections are exact products over the union of literals.
std::vector<double> inclusion_exclusion_terms(const DnfFormula& events, unsigned upto, double max_subsets = 5e7,
                                              unsigned threads = 0);

}  // namespace relicut
