#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relicut/digraph.hpp"
#include "relicut/multigraph.hpp"

namespace relicut {

/// Contents of a graph file:
///
///   # comment
///   p reliability <n> <m>
///   e <u> <v> [p_fail]     (undirected edge, 1-indexed)
///   a <u> <v> [p_fail]     (directed arc)
///
/// Exactly m edge or arc lines, all of one kind. A per-line probability
/// overrides the default.
struct GraphFile {
  std::size_t n = 0;
  bool directed = false;
  /// 0-indexed, probabilities resolved.
  std::vector<Edge> edges;

  /// Throws InputError if the file holds arcs.
  Multigraph graph() const;
  /// Throws InputError if the file holds undirected edges.
  Digraph digraph() const;
};

/// Throws InputError with "<source>:<line>: ..." on malformed input, or
/// when a line has no probability and no default is given.
GraphFile parse_graph(std::istream& in, std::optional<double> default_p = std::nullopt,
                      const std::string& source = "<input>");
GraphFile parse_graph_file(const std::string& path, std::optional<double> default_p = std::nullopt);

/// Serializes with full-precision probabilities; parse_graph reads it back
/// unchanged.
std::string format_graph(const Multigraph& g);
std::string format_digraph(const Digraph& g);

Multigraph make_path(std::size_t n, double p);
Multigraph make_cycle(std::size_t n, double p);
Multigraph make_clique(std::size_t n, double p);
/// Cycle with every edge replaced by `bundle` parallel edges.
Multigraph make_bundled_cycle(std::size_t n, std::size_t bundle, double p);
/// Connected graph: a random spanning tree plus m - n + 1 random extra edges
/// (parallel edges allowed). Throws InputError if m < n - 1.
Multigraph make_random_graph(std::size_t n, std::size_t m, double p, std::uint64_t seed);
/// Directed cycle in both directions, each direction `bundle` times.
Digraph make_bidirected_cycle(std::size_t n, std::size_t bundle, double p);

}  // namespace relicut
