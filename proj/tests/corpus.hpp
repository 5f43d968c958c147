#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "relicut/digraph.hpp"
#include "relicut/graph_io.hpp"
#include "relicut/multigraph.hpp"

namespace relicut::testing {

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

inline Multigraph star(std::size_t leaves, double p) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, VertexId(i), p});
  return Multigraph::build(leaves + 1, std::move(edges));
}

// Two triangles {0,1,2} and {3,4,5} joined by two parallel edges 2-3.
inline Multigraph joined_triangles(double p) {
  return Multigraph::build(6, {{0, 1, p}, {1, 2, p}, {0, 2, p}, {3, 4, p}, {4, 5, p}, {3, 5, p}, {2, 3, p}, {2, 3, p}});
}

// Hypercube Q3.
inline Multigraph cube(double p) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < 8; ++v)
    for (VertexId bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit)) edges.push_back({v, VertexId(v | bit), p});
  return Multigraph::build(8, std::move(edges));
}

/// Connected test graphs with every edge at probability p.
inline std::vector<NamedGraph> corpus(double p = 0.5) {
  return {
      {"P3", make_path(3, p)},
      {"P5", make_path(5, p)},
      {"K1,3", star(3, p)},
      {"C3", make_cycle(3, p)},
      {"C4", make_cycle(4, p)},
      {"C5", make_cycle(5, p)},
      {"C6", make_cycle(6, p)},
      {"K4", make_clique(4, p)},
      {"C4x2", make_bundled_cycle(4, 2, p)},
      {"C3x4", make_bundled_cycle(3, 4, p)},
      {"R6,10", make_random_graph(6, 10, p, 11)},
      {"2xK3", joined_triangles(p)},
      {"K5", make_clique(5, p)},
  };
}

/// The corpus plus larger graphs used for cut enumeration (n <= 8).
inline std::vector<NamedGraph> cut_corpus() {
  auto all = corpus();
  all.push_back({"C7", make_cycle(7, 0.5)});
  all.push_back({"C8", make_cycle(8, 0.5)});
  all.push_back({"Q3", cube(0.5)});
  return all;
}

/// Each undirected edge replaced by one arc in each direction (Eulerian).
inline Digraph bidirect(const Multigraph& g) {
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    arcs.push_back({e.u, e.v, e.p_fail});
    arcs.push_back({e.v, e.u, e.p_fail});
  }
  return Digraph::build(g.vertex_count(), std::move(arcs));
}

inline bool within(double value, double exact, double rel) {
  return std::abs(value - exact) <= rel * std::abs(exact);
}

}  // namespace relicut::testing
