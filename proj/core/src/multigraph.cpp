#include "relicut/multigraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "dense_cut.hpp"
#include "relicut/errors.hpp"

namespace relicut {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

Multigraph Multigraph::build(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw InputError("graph needs at least one vertex");
  if (n > std::numeric_limits<VertexId>::max()) throw InputError("too many vertices");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= n || e.v >= n)
      throw InputError("edge " + std::to_string(i) + ": endpoint out of range");
    if (e.u == e.v) throw InputError("edge " + std::to_string(i) + ": self-loop");
    if (!(e.p_fail >= 0.0 && e.p_fail <= 1.0))
      throw InputError("edge " + std::to_string(i) + ": failure probability outside [0, 1]");
  }
  Multigraph g;
  g.n_ = n;
  g.log_fail_.reserve(edges.size());
  for (const Edge& e : edges) g.log_fail_.push_back(e.p_fail > 0.0 ? std::log(e.p_fail) : -kInf);
  g.edges_ = std::move(edges);
  return g;
}

bool Multigraph::uniform_probability() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return e.p_fail == edges_.front().p_fail; });
}

Multigraph Multigraph::with_probability(double p) const {
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) e.p_fail = p;
  return build(n_, std::move(edges));
}

WeightedView::WeightedView(std::vector<double> weights) : weights_(std::move(weights)) {
  double common = -1.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InputError("edge weights must be nonnegative");
    if (w == kInf) continue;
    if (w == 0.0 || (common >= 0.0 && w != common)) uniform_ = false;
    common = w;
  }
}

WeightedView WeightedView::unit(const Multigraph& g) {
  return WeightedView(std::vector<double>(g.edge_count(), 1.0));
}

WeightedView WeightedView::failure_log(const Multigraph& g) {
  std::vector<double> w(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = -g.log_fail(e);
  return WeightedView(std::move(w));
}

ContractionState::ContractionState(const Multigraph& g)
    : graph_(&g), sets_(g.vertex_count()), supervertices_(g.vertex_count()) {
  surviving_.resize(g.edge_count());
  std::iota(surviving_.begin(), surviving_.end(), 0u);
}

void ContractionState::contract(EdgeId e) {
  if (e >= graph_->edge_count()) throw InputError("edge id out of range");
  const Edge& edge = graph_->edge(e);
  if (!sets_.unite(edge.u, edge.v))
    throw InputError("edge " + std::to_string(e) + " is internal to a supervertex");
  --supervertices_;
  std::erase_if(surviving_, [&](EdgeId f) {
    const Edge& x = graph_->edge(f);
    return sets_.same(x.u, x.v);
  });
}

std::vector<std::uint32_t> ContractionState::labels() {
  std::vector<std::uint32_t> roots(graph_->vertex_count());
  for (VertexId v = 0; v < roots.size(); ++v) roots[v] = sets_.find(v);
  std::vector<std::uint32_t> remap(roots.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (auto& r : roots) {
    if (remap[r] == UINT32_MAX) remap[r] = next++;
    r = remap[r];
  }
  return roots;
}

std::size_t component_count(const Multigraph& g, EdgeMask alive) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (alive[e]) sets.unite(g.edge(e).u, g.edge(e).v);
  return sets.set_count();
}

bool is_connected(const Multigraph& g, EdgeMask alive) { return component_count(g, alive) == 1; }

bool terminals_connected(const Multigraph& g, EdgeMask alive, std::span<const VertexId> terminals) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (alive[e]) sets.unite(g.edge(e).u, g.edge(e).v);
  for (VertexId t : terminals)
    if (!sets.same(t, terminals.front())) return false;
  return true;
}

bool is_k_edge_connected(const Multigraph& g, EdgeMask alive, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return true;
  if (!is_connected(g, alive)) return false;
  if (k <= 1) return true;
  std::vector<double> matrix(n * n, 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!alive[e]) continue;
    const Edge& x = g.edge(e);
    matrix[x.u * n + x.v] += 1.0;
    matrix[x.v * n + x.u] += 1.0;
  }
  return detail::stoer_wagner(n, std::move(matrix), nullptr) >= static_cast<double>(k);
}

std::vector<EdgeId> crossing_edges(const Multigraph& g, std::span<const std::uint32_t> labels) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (labels[g.edge(e).u] != labels[g.edge(e).v]) out.push_back(e);
  return out;
}

namespace {

// Supervertex index per vertex after merging never-failing edges.
std::vector<std::uint32_t> quotient_by_infinite(const Multigraph& g, std::span<const double> w,
                                                std::size_t& classes) {
  DisjointSets sets(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (w[e] == kInf) sets.unite(g.edge(e).u, g.edge(e).v);
  std::vector<std::uint32_t> index(g.vertex_count(), UINT32_MAX), out(g.vertex_count());
  classes = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto r = sets.find(v);
    if (index[r] == UINT32_MAX) index[r] = static_cast<std::uint32_t>(classes++);
    out[v] = index[r];
  }
  return out;
}

}  // namespace

MinCutResult min_cut(const Multigraph& g, const WeightedView* weights) {
  const std::size_t n = g.vertex_count();
  MinCutResult result;
  result.side.assign(n, 0);

  DisjointSets all(n);
  for (const Edge& e : g.edges()) all.unite(e.u, e.v);
  if (all.set_count() > 1) {
    result.connected = false;
    result.value = 0.0;
    for (VertexId v = 0; v < n; ++v) result.side[v] = all.same(v, 0) ? 0 : 1;
    return result;
  }
  if (n == 1) {
    result.value = kInf;
    return result;
  }

  const WeightedView unit = WeightedView::unit(g);
  const WeightedView& w = weights ? *weights : unit;
  std::size_t k = 0;
  const auto cls = quotient_by_infinite(g, w.weights(), k);
  if (k == 1) {
    result.value = kInf;
    return result;
  }
  std::vector<double> matrix(k * k, 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double x = w.weight(e);
    if (x == kInf) continue;
    const auto a = cls[g.edge(e).u], b = cls[g.edge(e).v];
    if (a == b) continue;
    matrix[a * k + b] += x;
    matrix[b * k + a] += x;
  }
  std::vector<std::uint32_t> group;
  result.value = detail::stoer_wagner(k, std::move(matrix), &group);
  std::vector<std::uint8_t> in_group(k, 0);
  for (auto q : group) in_group[q] = 1;
  const bool flip = in_group[cls[0]] != 0;
  for (VertexId v = 0; v < n; ++v) result.side[v] = static_cast<std::uint8_t>((in_group[cls[v]] != 0) != flip);
  return result;
}

double min_st_cut_value(const Multigraph& g, const WeightedView& weights, VertexId s, VertexId t) {
  const std::size_t n = g.vertex_count();
  if (s >= n || t >= n) throw InputError("terminal out of range");
  if (s == t) return kInf;
  double finite_total = 0.0;
  for (double x : weights.weights())
    if (x != kInf) finite_total += x;
  const double big = 2.0 * finite_total + 1.0;
  std::vector<double> capacity(n * n, 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double x = weights.weight(e) == kInf ? big : weights.weight(e);
    const Edge& edge = g.edge(e);
    capacity[edge.u * n + edge.v] += x;
    capacity[edge.v * n + edge.u] += x;
  }
  const double flow = detail::max_flow(n, std::move(capacity), s, t);
  return flow >= big ? kInf : flow;
}

namespace detail {

double stoer_wagner(std::size_t k, std::vector<double> matrix, std::vector<std::uint32_t>* best_group) {
  if (k < 2) return kInf;
  std::vector<std::vector<std::uint32_t>> groups(k);
  for (std::uint32_t i = 0; i < k; ++i) groups[i] = {i};
  std::vector<std::uint8_t> merged(k, 0), added(k, 0);
  std::vector<double> attach(k);
  double best = kInf;

  for (std::size_t phase = 0; phase + 1 < k; ++phase) {
    std::fill(attach.begin(), attach.end(), 0.0);
    std::fill(added.begin(), added.end(), 0);
    std::uint32_t prev = UINT32_MAX;
    const std::size_t active = k - phase;
    for (std::size_t step = 0; step < active; ++step) {
      std::uint32_t sel = UINT32_MAX;
      for (std::uint32_t v = 0; v < k; ++v)
        if (!merged[v] && !added[v] && (sel == UINT32_MAX || attach[v] > attach[sel])) sel = v;
      added[sel] = 1;
      if (step + 1 == active) {
        if (attach[sel] < best) {
          best = attach[sel];
          if (best_group) *best_group = groups[sel];
        }
        groups[prev].insert(groups[prev].end(), groups[sel].begin(), groups[sel].end());
        for (std::uint32_t v = 0; v < k; ++v) {
          matrix[prev * k + v] += matrix[sel * k + v];
          matrix[v * k + prev] = matrix[prev * k + v];
        }
        matrix[prev * k + prev] = 0.0;
        merged[sel] = 1;
      } else {
        prev = sel;
        for (std::uint32_t v = 0; v < k; ++v)
          if (!merged[v] && !added[v]) attach[v] += matrix[sel * k + v];
      }
    }
  }
  return best;
}

double max_flow(std::size_t k, std::vector<double> capacity, std::uint32_t s, std::uint32_t t) {
  double total = 0.0;
  std::vector<std::uint32_t> parent(k);
  for (;;) {
    std::fill(parent.begin(), parent.end(), UINT32_MAX);
    parent[s] = s;
    std::queue<std::uint32_t> queue;
    queue.push(s);
    while (!queue.empty() && parent[t] == UINT32_MAX) {
      const auto u = queue.front();
      queue.pop();
      for (std::uint32_t v = 0; v < k; ++v) {
        if (parent[v] == UINT32_MAX && capacity[u * k + v] > 1e-12) {
          parent[v] = u;
          queue.push(v);
        }
      }
    }
    if (parent[t] == UINT32_MAX) return total;
    double bottleneck = kInf;
    for (auto v = t; v != s; v = parent[v]) bottleneck = std::min(bottleneck, capacity[parent[v] * k + v]);
    for (auto v = t; v != s; v = parent[v]) {
      capacity[parent[v] * k + v] -= bottleneck;
      capacity[v * k + parent[v]] += bottleneck;
    }
    total += bottleneck;
  }
}

}  // namespace detail
}  // namespace relicut
