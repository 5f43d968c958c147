#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "relicut/union_find.hpp"

namespace relicut {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// An undirected edge that fails independently with probability p_fail.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  double p_fail = 0.0;
};

/// Undirected multigraph with per-edge failure probabilities. Immutable after
/// build(); safe to share between threads.
///
/// Parallel edges are allowed, self-loops are not. Vertices are 0-indexed.
class Multigraph {
 public:
  /// Validates and builds. Throws InputError on n == 0, an endpoint outside
  /// [0, n), a self-loop, or a probability outside [0, 1].
  static Multigraph build(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  /// ln p_fail; -infinity for edges that never fail.
  double log_fail(EdgeId e) const { return log_fail_[e]; }
  std::span<const double> log_fail() const { return log_fail_; }

  /// True when every edge has the same failure probability.
  bool uniform_probability() const;

  /// Copy with every edge failing with probability p.
  Multigraph with_probability(double p) const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> log_fail_;
};

/// Per-edge nonnegative weights used for cut values. An infinite weight marks
/// an edge that can never fail; cuts crossing it are excluded from failure
/// events.
class WeightedView {
 public:
  explicit WeightedView(std::vector<double> weights);

  /// Every edge weighs 1: cut values are edge counts.
  static WeightedView unit(const Multigraph& g);
  /// w_e = ln(1/p_e); +infinity when p_e = 0. A cut of weight w fails with
  /// probability exp(-w).
  static WeightedView failure_log(const Multigraph& g);

  double weight(EdgeId e) const { return weights_[e]; }
  std::span<const double> weights() const { return weights_; }
  bool never_fails(EdgeId e) const { return weights_[e] == std::numeric_limits<double>::infinity(); }
  /// True when all finite weights are equal and positive.
  bool uniform() const { return uniform_; }

 private:
  std::vector<double> weights_;
  bool uniform_ = true;
};

/// A sequence of edge contractions applied to a fixed graph. Tracks the
/// supervertex of every original vertex and the edges that still join two
/// distinct supervertices.
class ContractionState {
 public:
  /// Keeps a pointer to `g`, which must outlive the state.
  explicit ContractionState(const Multigraph& g);
  explicit ContractionState(Multigraph&&) = delete;

  /// Merges the endpoints of `e` and drops edges that became self-loops.
  /// Throws InputError if `e` is already inside one supervertex.
  void contract(EdgeId e);

  std::size_t supervertex_count() const { return supervertices_; }
  std::span<const EdgeId> surviving_edges() const { return surviving_; }
  VertexId supervertex_of(VertexId v) { return sets_.find(v); }
  /// Supervertex label per original vertex, numbered by first appearance.
  std::vector<std::uint32_t> labels();

 private:
  const Multigraph* graph_;
  DisjointSets sets_;
  std::vector<EdgeId> surviving_;
  std::size_t supervertices_;
};

/// alive[e] != 0 marks surviving edges.
using EdgeMask = std::span<const std::uint8_t>;

bool is_connected(const Multigraph& g, EdgeMask alive);
std::size_t component_count(const Multigraph& g, EdgeMask alive);
/// True iff the surviving subgraph is k-edge-connected (a single vertex is).
bool is_k_edge_connected(const Multigraph& g, EdgeMask alive, unsigned k);
/// True iff every vertex of `terminals` lies in one surviving component.
bool terminals_connected(const Multigraph& g, EdgeMask alive, std::span<const VertexId> terminals);

struct MinCutResult {
  /// Cut value; 0 for a disconnected graph, +infinity when the never-failing
  /// edges already join every vertex.
  double value = 0.0;
  bool connected = true;
  /// side[v] == 1 for vertices on the side not containing vertex 0.
  std::vector<std::uint8_t> side;
};

/// Exact global minimum cut (Stoer-Wagner); unit weights when `weights` is
/// null.
MinCutResult min_cut(const Multigraph& g, const WeightedView* weights = nullptr);
inline double min_cut_value(const Multigraph& g, const WeightedView* weights = nullptr) {
  return min_cut(g, weights).value;
}

/// Exact minimum s-t cut value (max flow). Infinity if only never-failing
/// edges separate s from t.
double min_st_cut_value(const Multigraph& g, const WeightedView& weights, VertexId s, VertexId t);

/// Edges whose endpoints carry different labels.
std::vector<EdgeId> crossing_edges(const Multigraph& g, std::span<const std::uint32_t> labels);

}  // namespace relicut
