#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relicut/cut_enum.hpp"
#include "relicut/multigraph.hpp"

namespace relicut {

/// x_var when positive, not x_var otherwise.
struct Literal {
  std::uint32_t var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Disjunction of conjunctions over independent boolean variables; variable
/// i is true with probability q[i].
class DnfFormula {
 public:
  /// Throws InputError on an empty clause, a repeated variable inside a
  /// clause, an undefined variable, or q outside [0, 1].
  static DnfFormula build(std::vector<double> q, std::vector<Clause> clauses);

  std::size_t variable_count() const { return q_.size(); }
  std::size_t clause_count() const { return clauses_.size(); }
  double q(std::uint32_t var) const { return q_[var]; }
  std::span<const double> q() const { return q_; }
  const Clause& clause(std::size_t i) const { return clauses_[i]; }
  std::span<const Clause> clauses() const { return clauses_; }

  /// ln Pr[clause i true]; -infinity if it can never hold.
  double log_clause_weight(std::size_t i) const { return log_weight_[i]; }

 private:
  std::vector<double> q_;
  std::vector<Clause> clauses_;
  std::vector<double> log_weight_;
};

struct CoverageEstimate {
  double value = 0.0;
  std::uint64_t samples = 0;
  double epsilon = 0.0;
  double eta = 0.0;
  /// W = sum of clause probabilities.
  double total_weight = 0.0;
  double max_weight = 0.0;
};

/// Exact Pr[F] over the variables that occur in some clause. Throws
/// BudgetError above `max_variables` (at most 25).
double exact_union_probability(const DnfFormula& f, unsigned max_variables = 25);

/// dist[u] = Pr[exactly u clauses are true], u = 0..#clauses, by exhaustive
/// enumeration of the occurring variables.
std::vector<double> satisfied_count_distribution(const DnfFormula& f, unsigned max_variables = 25);

/// Karp-Luby-Madras coverage estimator: sample clause i with probability
/// w_i / W, an assignment conditioned on clause i, and score 1 if i is the
/// lowest-indexed satisfied clause; the value is W times the mean score.
/// Sampling stops by the Dagum-Karp-Luby-Ross rule and never exceeds
/// N = ceil(3 M ln(4/eta) / eps^2), M the number of clauses with positive
/// probability. Result lies in [max w_i, min(1, W)]. Throws InputError if
/// every clause has probability 0.
CoverageEstimate estimate_union_probability(const DnfFormula& f, double epsilon, double eta, std::uint64_t seed,
                                            unsigned threads = 0);

/// Plain mean of `samples` coverage scores times W (no stopping rule). An
/// unbiased estimate of Pr[F].
double coverage_sample_mean(const DnfFormula& f, std::uint64_t samples, std::uint64_t seed);

/// One variable per edge (q = p_fail), one positive clause per cut.
/// Clauses containing a never-failing edge and duplicate clauses are dropped.
DnfFormula build_cut_failure_formula(std::span<const CutRecord> cuts, const Multigraph& g);

/// For a cut with C edges, one clause per (C-k+1)-subset of its edges: true
/// iff fewer than k of the cut's edges survive. Throws InputError if k = 0
/// or some cut has fewer than k edges.
DnfFormula build_k_failure_formula(std::span<const CutRecord> cuts, const Multigraph& g, unsigned k);

}  // namespace relicut
