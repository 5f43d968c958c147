#include "relicut/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "relicut/errors.hpp"
#include "relicut/parallel.hpp"
#include "relicut/partitions.hpp"

namespace relicut {

namespace {

constexpr unsigned kChunkBits = 10;

void check_edges(std::size_t m, unsigned limit, const char* what) {
  if (m > limit)
    throw BudgetError(std::string(what) + " oracle limited to " + std::to_string(limit) + " edges, input has " +
                      std::to_string(m));
}

// hist[b] = total probability of the failure patterns that make_bin()
// classifies as b. Bit e of a pattern set means edge e survives (probability
// 1 - p_fail[e]). Chunks are reduced in index order.
template <class MakeBin>
std::vector<double> histogram_over_patterns(std::span<const double> p_fail, std::size_t bins, MakeBin&& make_bin) {
  const std::size_t m = p_fail.size();
  const std::size_t low = std::min<std::size_t>(m, kChunkBits);
  auto table = [&](std::size_t from, std::size_t count) {
    std::vector<double> t(std::size_t{1} << count, 1.0);
    for (std::size_t mask = 0; mask < t.size(); ++mask)
      for (std::size_t i = 0; i < count; ++i)
        t[mask] *= (mask >> i & 1) ? 1.0 - p_fail[from + i] : p_fail[from + i];
    return t;
  };
  const std::vector<double> lo = table(0, low);
  const std::vector<double> hi = table(low, m - low);
  std::vector<std::vector<double>> partial(hi.size());
  parallel_for(hi.size(), 0, [&](std::size_t h) {
    partial[h].assign(bins, 0.0);
    if (hi[h] == 0.0) return;
    auto bin = make_bin();
    std::vector<std::uint8_t> alive(m);
    for (std::size_t i = low; i < m; ++i) alive[i] = (h >> (i - low)) & 1;
    for (std::size_t l = 0; l < lo.size(); ++l) {
      if (lo[l] == 0.0) continue;
      for (std::size_t i = 0; i < low; ++i) alive[i] = (l >> i) & 1;
      partial[h][bin(EdgeMask(alive))] += lo[l];
    }
    for (double& x : partial[h]) x *= hi[h];
  });
  std::vector<double> total(bins, 0.0);
  for (const auto& part : partial)
    for (std::size_t b = 0; b < bins; ++b) total[b] += part[b];
  return total;
}

template <class MakePredicate>
double sum_over_patterns(std::span<const double> p_fail, MakePredicate&& make_predicate) {
  const auto hist = histogram_over_patterns(p_fail, 2, [&] {
    return [pred = make_predicate()](EdgeMask alive) mutable -> std::size_t { return pred(alive) ? 1 : 0; };
  });
  return std::clamp(hist[1], 0.0, 1.0);
}

std::vector<double> edge_probabilities(const Multigraph& g) {
  std::vector<double> p(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) p[e] = g.edge(e).p_fail;
  return p;
}

std::vector<CutRecord> finish_list(std::vector<CutRecord> all, double alpha) {
  double c = std::numeric_limits<double>::infinity();
  for (const CutRecord& rec : all) c = std::min(c, rec.value);
  const double limit = alpha * c * (1.0 + kCutTieTolerance);
  std::erase_if(all, [&](const CutRecord& rec) { return !(rec.value <= limit); });
  std::sort(all.begin(), all.end(), [](const CutRecord& a, const CutRecord& b) {
    return a.value != b.value ? a.value < b.value : a.labels < b.labels;
  });
  return all;
}

}  // namespace

double exact_fail(const Multigraph& g, const OracleBudget& budget) {
  check_edges(g.edge_count(), budget.max_edges, "reliability");
  return sum_over_patterns(edge_probabilities(g), [&] { return [&](EdgeMask alive) { return !is_connected(g, alive); }; });
}

double exact_kconn_fail(const Multigraph& g, unsigned k, const OracleBudget& budget) {
  if (k == 0) throw InputError("k must be at least 1");
  check_edges(g.edge_count(), budget.max_edges, "k-connectivity");
  return sum_over_patterns(edge_probabilities(g),
                           [&] { return [&](EdgeMask alive) { return !is_k_edge_connected(g, alive, k); }; });
}

double exact_multiterminal_fail(const Multigraph& g, std::span<const VertexId> terminals, const OracleBudget& budget) {
  if (terminals.size() < 2) throw InputError("need at least 2 terminals");
  for (VertexId t : terminals)
    if (t >= g.vertex_count()) throw InputError("terminal out of range");
  check_edges(g.edge_count(), budget.max_edges, "multiterminal");
  return sum_over_patterns(edge_probabilities(g), [&] {
    return [&](EdgeMask alive) { return !terminals_connected(g, alive, terminals); };
  });
}

double exact_strong_fail(const Digraph& g, const OracleBudget& budget) {
  check_edges(g.arc_count(), budget.max_edges, "strong connectivity");
  std::vector<double> p(g.arc_count());
  for (EdgeId a = 0; a < g.arc_count(); ++a) p[a] = g.arc(a).p_fail;
  return sum_over_patterns(p, [&] {
    return [&g, strong = StrongConnectivity(g.vertex_count()),
            arcs = std::vector<std::pair<VertexId, VertexId>>()](EdgeMask alive) mutable {
      arcs.clear();
      for (EdgeId a = 0; a < g.arc_count(); ++a)
        if (alive[a]) arcs.emplace_back(g.arc(a).tail, g.arc(a).head);
      return !strong(arcs);
    };
  });
}

double exact_orientation_fail(const Multigraph& g, const OracleBudget& budget) {
  check_edges(g.edge_count(), budget.max_orientations, "orientation");
  // Bit set: edge points u -> v. Each orientation has weight 2^-m.
  const std::vector<double> half(g.edge_count(), 0.5);
  return sum_over_patterns(half, [&] {
    return [&g, strong = StrongConnectivity(g.vertex_count()),
            arcs = std::vector<std::pair<VertexId, VertexId>>()](EdgeMask forward) mutable {
      arcs.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (forward[e])
          arcs.emplace_back(edge.u, edge.v);
        else
          arcs.emplace_back(edge.v, edge.u);
      }
      return !strong(arcs);
    };
  });
}

double exact_rway_fail(const Multigraph& g, unsigned r, const OracleBudget& budget) {
  if (r < 1) throw InputError("r must be at least 1");
  check_edges(g.edge_count(), budget.max_edges, "r-way partition");
  return sum_over_patterns(edge_probabilities(g),
                           [&] { return [&](EdgeMask alive) { return component_count(g, alive) >= r; }; });
}

PartitionTail exact_partition_tail(const Multigraph& g, const OracleBudget& budget) {
  check_edges(g.edge_count(), budget.max_edges, "partition tail");
  const std::size_t n = g.vertex_count();
  PartitionTail tail;
  tail.p = histogram_over_patterns(edge_probabilities(g), n + 1,
                                   [&] { return [&](EdgeMask alive) { return component_count(g, alive); }; });
  tail.s.assign(n + 2, 0.0);
  for (std::size_t r = n + 1; r-- > 0;) tail.s[r] = tail.s[r + 1] + tail.p[r];
  tail.s.resize(n + 1);
  tail.s[0] = 1.0;
  for (double& x : tail.s) x = std::min(x, 1.0);
  return tail;
}

PartitionTail exact_partition_tail(const Multigraph& g, double p, const OracleBudget& budget) {
  return exact_partition_tail(g.with_probability(p), budget);
}

std::vector<CutRecord> exact_cut_list(const Multigraph& g, double alpha, const WeightedView* weights,
                                      const OracleBudget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > budget.max_vertices_for_partitions)
    throw BudgetError("cut list oracle limited to " + std::to_string(budget.max_vertices_for_partitions) +
                      " vertices");
  const WeightedView unit = WeightedView::unit(g);
  const WeightedView& w = weights ? *weights : unit;
  std::vector<CutRecord> all;
  std::vector<std::uint32_t> labels(n, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    for (std::size_t v = 1; v < n; ++v) labels[v] = (mask >> (v - 1)) & 1;
    all.push_back(make_cut_record(g, w, labels));
  }
  return finish_list(std::move(all), alpha);
}

std::vector<CutRecord> exact_rway_cut_list(const Multigraph& g, unsigned r, double alpha, const WeightedView* weights,
                                           const OracleBudget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > budget.max_vertices_for_set_partitions)
    throw BudgetError("r-way cut list oracle limited to " + std::to_string(budget.max_vertices_for_set_partitions) +
                      " vertices");
  if (r < 2 || r > n) throw InputError("r must lie in [2, n]");
  const WeightedView unit = WeightedView::unit(g);
  const WeightedView& w = weights ? *weights : unit;
  std::vector<CutRecord> all;
  for_each_set_partition(static_cast<std::uint32_t>(n), r,
                         [&](std::span<const std::uint32_t> labels) { all.push_back(make_cut_record(g, w, labels)); });
  return finish_list(std::move(all), alpha);
}

}  // namespace relicut
