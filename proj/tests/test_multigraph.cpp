#include <algorithm>
#include <limits>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/errors.hpp"
#include "relicut/multigraph.hpp"
#include "relicut/random.hpp"

using namespace relicut;
using namespace relicut::testing;

namespace {

// Minimum over all 2^{n-1} - 1 bipartitions.
double brute_min_cut(const Multigraph& g, const WeightedView& w) {
  const std::size_t n = g.vertex_count();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    double value = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto side = [&](VertexId v) { return v == 0 ? 0 : (mask >> (v - 1)) & 1; };
      if (side(g.edge(e).u) != side(g.edge(e).v)) value += w.weight(e);
    }
    best = std::min(best, value);
  }
  return best;
}

std::vector<double> cut_values(const Multigraph& g, std::span<const std::uint32_t> merge_labels) {
  // Cut values over bipartitions that keep equal-labelled vertices together.
  const std::size_t n = g.vertex_count();
  std::vector<double> values;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    const auto side = [&](VertexId v) -> int { return v == 0 ? 0 : (mask >> (v - 1)) & 1; };
    bool ok = true;
    for (VertexId a = 0; a < n && ok; ++a)
      for (VertexId b = a + 1; b < n && ok; ++b)
        if (merge_labels[a] == merge_labels[b] && side(a) != side(b)) ok = false;
    if (!ok) continue;
    double value = 0.0;
    for (const Edge& e : g.edges())
      if (side(e.u) != side(e.v)) value += 1.0;
    values.push_back(value);
  }
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

TEST_CASE("build validates its input") {
  CHECK(Multigraph::build(3, {{0, 1, .5}, {1, 2, .5}, {0, 2, .5}}).edge_count() == 3);
  CHECK(Multigraph::build(2, {{0, 1, .3}, {0, 1, .3}}).edge_count() == 2);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 0, .3}}), InputError);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 2, .3}}), InputError);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, 1.5}}), InputError);
  CHECK_THROWS_AS(Multigraph::build(2, {{0, 1, -0.1}}), InputError);
  CHECK_THROWS_AS(Multigraph::build(0, {}), InputError);
}

TEST_CASE("failure-log weights") {
  const Multigraph g = Multigraph::build(2, {{0, 1, 0.5}, {0, 1, 0.0}});
  const WeightedView w = WeightedView::failure_log(g);
  CHECK(w.weight(0) == doctest::Approx(std::log(2.0)));
  CHECK(w.never_fails(1));
  CHECK(g.log_fail(1) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("contraction examples") {
  SUBCASE("triangle") {
    const Multigraph g = make_cycle(3, 0.5);
    ContractionState s(g);
    s.contract(0);
    CHECK(s.supervertex_count() == 2);
    CHECK(s.surviving_edges().size() == 2);
  }
  SUBCASE("path") {
    const Multigraph g = make_path(3, 0.5);
    ContractionState s(g);
    s.contract(0);
    CHECK(s.supervertex_count() == 2);
    CHECK(s.surviving_edges().size() == 1);
  }
  SUBCASE("4-cycle") {
    const Multigraph g = make_cycle(4, 0.5);
    ContractionState s(g);
    s.contract(0);
    s.contract(2);
    CHECK(s.supervertex_count() == 2);
    CHECK(s.surviving_edges().size() == 2);
    CHECK_THROWS_AS(s.contract(0), InputError);
  }
}

TEST_CASE("contraction preserves exactly the cuts not crossed by the edge") {
  for (const auto& [name, g] : corpus()) {
    if (g.vertex_count() > 7) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CAPTURE(name);
      CAPTURE(e);
      ContractionState s(g);
      s.contract(e);
      const auto labels = s.labels();
      // Cuts of G/e, rebuilt as a graph on the supervertices.
      std::vector<Edge> edges;
      for (EdgeId id : s.surviving_edges()) edges.push_back({labels[g.edge(id).u], labels[g.edge(id).v], 0.5});
      const Multigraph contracted = Multigraph::build(s.supervertex_count(), std::move(edges));
      std::vector<std::uint32_t> identity(contracted.vertex_count());
      for (std::uint32_t i = 0; i < identity.size(); ++i) identity[i] = i;
      CHECK(cut_values(contracted, identity) == cut_values(g, labels));
    }
  }
}

TEST_CASE("connectivity") {
  const Multigraph tri = make_cycle(3, 0.5);
  const std::vector<std::uint8_t> two{1, 1, 0}, one{1, 0, 0};
  CHECK(is_connected(tri, two));
  CHECK_FALSE(is_connected(tri, one));
  CHECK(is_connected(Multigraph::build(1, {}), {}));
  CHECK(component_count(tri, one) == 2);
  const std::vector<std::uint8_t> all(3, 1);
  CHECK(is_k_edge_connected(tri, all, 2));
  CHECK_FALSE(is_k_edge_connected(tri, all, 3));
  const std::vector<VertexId> ends{0, 1};
  CHECK(terminals_connected(tri, one, ends));
}

TEST_CASE("minimum cut examples") {
  CHECK(min_cut_value(make_cycle(5, 0.5)) == 2.0);
  CHECK(min_cut_value(make_clique(4, 0.5)) == 3.0);
  const Multigraph tri = Multigraph::build(3, {{0, 1, 0.1}, {1, 2, 0.2}, {0, 2, 0.3}});
  const WeightedView w = WeightedView::failure_log(tri);
  CHECK(min_cut_value(tri, &w) == doctest::Approx(std::log(1 / 0.2) + std::log(1 / 0.3)));
  const MinCutResult split = min_cut(Multigraph::build(3, {{0, 1, 0.5}}));
  CHECK_FALSE(split.connected);
  CHECK(split.value == 0.0);
}

TEST_CASE("Stoer-Wagner matches brute force on random weighted graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(7);
    const std::size_t m = n - 1 + rng.below(10);
    std::vector<Edge> edges;
    const Multigraph base = make_random_graph(n, m, 0.5, rng());
    for (const Edge& e : base.edges()) edges.push_back({e.u, e.v, 0.01 + 0.9 * rng.uniform()});
    const Multigraph g = Multigraph::build(n, std::move(edges));
    const WeightedView w = WeightedView::failure_log(g);
    const WeightedView unit = WeightedView::unit(g);
    CHECK(min_cut_value(g, &w) == doctest::Approx(brute_min_cut(g, w)).epsilon(1e-12));
    CHECK(min_cut_value(g) == brute_min_cut(g, unit));
  }
}

TEST_CASE("s-t cut") {
  const Multigraph g = make_path(4, 0.5);
  const WeightedView unit = WeightedView::unit(g);
  CHECK(min_st_cut_value(g, unit, 0, 3) == 1.0);
  CHECK(min_st_cut_value(make_clique(5, 0.5), WeightedView::unit(make_clique(5, 0.5)), 0, 4) == 4.0);
}
