#pragma once

#include <span>
#include <vector>

#include "relicut/cut_enum.hpp"
#include "relicut/digraph.hpp"
#include "relicut/multigraph.hpp"

namespace relicut {

/// Size limits for the brute-force oracles, checked before any enumeration.
struct OracleBudget {
  unsigned max_edges = 20;
  unsigned max_vertices_for_partitions = 10;
  unsigned max_vertices_for_set_partitions = 8;
  unsigned max_orientations = 16;
};

/// Exact probabilities by summing over all 2^m failure patterns. Each throws
/// BudgetError when the input exceeds the budget.
double exact_fail(const Multigraph& g, const OracleBudget& budget = {});
double exact_kconn_fail(const Multigraph& g, unsigned k, const OracleBudget& budget = {});
/// Terminals are 0-indexed.
double exact_multiterminal_fail(const Multigraph& g, std::span<const VertexId> terminals,
                                const OracleBudget& budget = {});
double exact_strong_fail(const Digraph& g, const OracleBudget& budget = {});
/// Over all 2^m orientations, each with probability 2^-m.
double exact_orientation_fail(const Multigraph& g, const OracleBudget& budget = {});
/// s_r: probability of r or more components.
double exact_rway_fail(const Multigraph& g, unsigned r, const OracleBudget& budget = {});

/// s[r] = Pr[at least r components], p[r] = Pr[exactly r components], for
/// r = 0..n. s[0] = s[1] = 1.
struct PartitionTail {
  std::vector<double> s;
  std::vector<double> p;
};

PartitionTail exact_partition_tail(const Multigraph& g, const OracleBudget& budget = {});
/// Same with every edge failing with probability p.
PartitionTail exact_partition_tail(const Multigraph& g, double p, const OracleBudget& budget = {});

/// All 2-way cuts of value <= alpha * c (relative tolerance
/// kCutTieTolerance) over every partition, canonical and sorted like
/// enumerate_alpha_min_cuts. Unit weights when `weights` is null.
std::vector<CutRecord> exact_cut_list(const Multigraph& g, double alpha, const WeightedView* weights = nullptr,
                                      const OracleBudget& budget = {});

/// All r-way cuts of value <= alpha * c_r over every set partition.
std::vector<CutRecord> exact_rway_cut_list(const Multigraph& g, unsigned r, double alpha,
                                           const WeightedView* weights = nullptr, const OracleBudget& budget = {});

}  // namespace relicut
