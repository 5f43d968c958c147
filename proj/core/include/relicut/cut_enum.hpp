#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relicut/digraph.hpp"
#include "relicut/multigraph.hpp"
#include "relicut/random.hpp"

namespace relicut {

/// Relative tolerance when comparing a cut value against alpha * c.
inline constexpr double kCutTieTolerance = 1e-9;

/// A 2-way or r-way vertex partition with its crossing edges.
///
/// `labels[v]` is the block of vertex v, numbered by first appearance, so
/// vertex 0 is always in block 0 and two records for the same partition are
/// identical.
struct CutRecord {
  std::vector<std::uint32_t> labels;
  std::vector<EdgeId> edge_ids;
  double value = 0.0;
  /// Value lies above alpha * c but within the enumeration slack.
  bool beyond_alpha = false;

  std::uint32_t blocks() const;
  /// Bit v set iff v is on the side without vertex 0. Requires n <= 64.
  std::uint64_t side_mask() const;

  friend bool operator==(const CutRecord&, const CutRecord&) = default;
};

/// A directed cut of an Eulerian digraph: the arcs leaving one side.
struct DirectedCutRecord {
  std::vector<std::uint32_t> labels;
  /// True: arcs from block 0 (holding vertex 0) to block 1. False: reverse.
  bool forward = true;
  std::vector<EdgeId> arc_ids;
  double value = 0.0;
  bool beyond_alpha = false;

  friend bool operator==(const DirectedCutRecord&, const DirectedCutRecord&) = default;
};

/// How many contraction trials to run and how far to contract.
struct EnumerationPlan {
  double alpha = 1.0;
  std::uint32_t blocks = 2;
  /// Supervertices left when contraction stops: ceil(2 alpha (r-1)).
  std::uint32_t base_size = 2;
  std::uint64_t trials = 1;
  double eta = 0.01;
  /// ln of the bound on the number of alpha-minimum cuts: n^{2 alpha} for
  /// r = 2, (rn)^{2 alpha (r-1)} otherwise.
  double log_count_bound = 0.0;
  /// Lower bound on the probability that one trial keeps a fixed
  /// alpha-minimum cut intact down to the base graph.
  double per_trial_success = 1.0;
  /// The base graph is the whole graph: one trial sees every cut.
  bool exhaustive = false;
};

/// Plan for a graph with `vertices` contractible vertices. The trial count
/// covers every alpha-minimum cut with probability at least 1 - eta by a
/// union bound over at most exp(log_count_bound) cuts.
EnumerationPlan make_plan(std::size_t vertices, std::uint32_t blocks, double alpha, double eta);

struct EnumerationOptions {
  double eta = 0.01;
  std::uint64_t seed = 0;
  /// Cuts up to alpha * c * slack are kept; those above alpha * c are
  /// flagged beyond_alpha.
  double slack = 1.05;
  unsigned threads = 0;
};

struct CutEnumeration {
  /// Sorted by value, then by labels.
  std::vector<CutRecord> cuts;
  /// Exact minimum cut value c (or c_r for r-way).
  double min_value = 0.0;
  EnumerationPlan plan;
};

/// Builds the record for a partition: canonicalizes labels and collects the
/// crossing edges. Value is their total weight.
CutRecord make_cut_record(const Multigraph& g, const WeightedView& weights, std::span<const std::uint32_t> labels);

/// Every 2-way cut of value <= alpha * c with probability >= 1 - eta,
/// deduplicated. Unit weights when `weights` is null. Throws InputError on a
/// disconnected graph or alpha < 1.
CutEnumeration enumerate_alpha_min_cuts(const Multigraph& g, const WeightedView* weights, double alpha,
                                        const EnumerationOptions& options = {});

/// r-way analogue: contracts to ceil(2 alpha (r-1)) supervertices and
/// emits every r-block partition of the base.
CutEnumeration enumerate_alpha_min_rway_cuts(const Multigraph& g, const WeightedView* weights, std::uint32_t r,
                                             double alpha, const EnumerationOptions& options = {});

/// One trial: weighted random contraction to plan.base_size supervertices,
/// then one record per plan.blocks-way partition of the base graph.
std::vector<CutRecord> single_contraction_trial(const Multigraph& g, const WeightedView& weights,
                                                const EnumerationPlan& plan, Rng& rng);

/// Exact minimum r-way cut value: exhaustive over set partitions for up to
/// 12 contractible vertices, randomized enumeration above that.
double min_rway_cut_value(const Multigraph& g, const WeightedView& weights, std::uint32_t r,
                          const EnumerationOptions& options = {});

struct DirectedCutEnumeration {
  std::vector<DirectedCutRecord> cuts;
  /// Minimum directed cut value (half the undirected minimum).
  double min_value = 0.0;
  EnumerationPlan plan;
};

/// Near-minimum directed cuts of an Eulerian digraph, via the alpha-minimum
/// cuts of its underlying undirected graph. Each undirected cut yields the
/// two directed cuts. Values count arcs. Throws InputError on non-Eulerian
/// or not strongly connected input.
DirectedCutEnumeration enumerate_directed_eulerian_cuts(const Digraph& g, double alpha,
                                                        const EnumerationOptions& options = {});

}  // namespace relicut
