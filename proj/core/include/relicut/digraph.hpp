#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relicut/multigraph.hpp"

namespace relicut {

/// A directed arc tail -> head that fails with probability p_fail.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  double p_fail = 0.0;
};

/// Directed multigraph; same validation rules as Multigraph.
class Digraph {
 public:
  static Digraph build(std::size_t n, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const Arc& arc(EdgeId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const { return arcs_; }
  bool uniform_probability() const;

  /// The undirected multigraph obtained by dropping directions; edge i of
  /// the result is arc i.
  Multigraph underlying() const;

 private:
  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
};

/// Per-vertex in/out degree mismatches, formatted for error messages. Empty
/// for an Eulerian digraph.
std::vector<std::string> eulerian_mismatches(const Digraph& g);

/// Throws InputError listing every vertex whose in-degree differs from its
/// out-degree.
void require_eulerian(const Digraph& g);

/// Reusable workspace for strong-connectivity tests on arc subsets.
class StrongConnectivity {
 public:
  explicit StrongConnectivity(std::size_t n) : n_(n) {}

  /// `arcs` holds (tail, head) pairs of the surviving arcs.
  bool operator()(std::span<const std::pair<VertexId, VertexId>> arcs);

 private:
  bool reaches_all(std::span<const std::pair<VertexId, VertexId>> arcs, bool reverse);

  std::size_t n_;
  std::vector<std::uint32_t> offset_, target_, stack_;
  std::vector<std::uint8_t> seen_;
};

bool is_strongly_connected(const Digraph& g, EdgeMask alive);

/// Minimum total weight of arcs leaving a vertex set (over all nonempty
/// proper subsets), weights w_a = ln(1/p_a). Infinity when only
/// never-failing arcs cross every directed cut.
double min_directed_cut_log_weight(const Digraph& g);

}  // namespace relicut
