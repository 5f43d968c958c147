#include "relicut/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dense_cut.hpp"
#include "relicut/errors.hpp"

namespace relicut {

Digraph Digraph::build(std::size_t n, std::vector<Arc> arcs) {
  if (n == 0) throw InputError("graph needs at least one vertex");
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail >= n || a.head >= n) throw InputError("arc " + std::to_string(i) + ": endpoint out of range");
    if (a.tail == a.head) throw InputError("arc " + std::to_string(i) + ": self-loop");
    if (!(a.p_fail >= 0.0 && a.p_fail <= 1.0))
      throw InputError("arc " + std::to_string(i) + ": failure probability outside [0, 1]");
  }
  Digraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  return g;
}

bool Digraph::uniform_probability() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.p_fail == arcs_.front().p_fail; });
}

Multigraph Digraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const Arc& a : arcs_) edges.push_back({a.tail, a.head, a.p_fail});
  return Multigraph::build(n_, std::move(edges));
}

std::vector<std::string> eulerian_mismatches(const Digraph& g) {
  std::vector<long> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
  for (const Arc& a : g.arcs()) {
    ++out[a.tail];
    ++in[a.head];
  }
  std::vector<std::string> mismatches;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (in[v] != out[v])
      mismatches.push_back("vertex " + std::to_string(v + 1) + ": in-degree " + std::to_string(in[v]) +
                           " != out-degree " + std::to_string(out[v]));
  return mismatches;
}

void require_eulerian(const Digraph& g) {
  const auto mismatches = eulerian_mismatches(g);
  if (mismatches.empty()) return;
  std::string message = "digraph is not Eulerian:";
  for (const auto& m : mismatches) message += " [" + m + "]";
  throw InputError(message);
}

bool StrongConnectivity::reaches_all(std::span<const std::pair<VertexId, VertexId>> arcs, bool reverse) {
  offset_.assign(n_ + 1, 0);
  for (const auto& [t, h] : arcs) ++offset_[(reverse ? h : t) + 1];
  for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] += offset_[v];
  target_.resize(arcs.size());
  stack_.assign(offset_.begin(), offset_.end() - 1);  // fill cursor
  for (const auto& [t, h] : arcs) {
    const auto from = reverse ? h : t;
    target_[stack_[from]++] = reverse ? t : h;
  }
  seen_.assign(n_, 0);
  stack_.clear();
  stack_.push_back(0);
  seen_[0] = 1;
  std::size_t reached = 1;
  while (!stack_.empty()) {
    const auto u = stack_.back();
    stack_.pop_back();
    for (auto i = offset_[u]; i < offset_[u + 1]; ++i) {
      const auto v = target_[i];
      if (!seen_[v]) {
        seen_[v] = 1;
        ++reached;
        stack_.push_back(v);
      }
    }
  }
  return reached == n_;
}

bool StrongConnectivity::operator()(std::span<const std::pair<VertexId, VertexId>> arcs) {
  if (n_ <= 1) return true;
  return reaches_all(arcs, false) && reaches_all(arcs, true);
}

bool is_strongly_connected(const Digraph& g, EdgeMask alive) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (EdgeId a = 0; a < g.arc_count(); ++a)
    if (alive[a]) arcs.emplace_back(g.arc(a).tail, g.arc(a).head);
  StrongConnectivity check(g.vertex_count());
  return check(arcs);
}

double min_directed_cut_log_weight(const Digraph& g) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = g.vertex_count();
  if (n < 2) return kInf;
  double finite_total = 0.0;
  for (const Arc& a : g.arcs())
    if (a.p_fail > 0.0) finite_total += -std::log(a.p_fail);
  const double big = 2.0 * finite_total + 1.0;
  std::vector<double> capacity(n * n, 0.0);
  for (const Arc& a : g.arcs()) capacity[a.tail * n + a.head] += a.p_fail > 0.0 ? -std::log(a.p_fail) : big;
  double best = kInf;
  // Every directed cut separates vertex 0 from some t in one direction.
  for (std::uint32_t t = 1; t < n; ++t) {
    best = std::min(best, detail::max_flow(n, capacity, 0, t));
    best = std::min(best, detail::max_flow(n, capacity, t, 0));
  }
  return best >= big ? kInf : best;
}

}  // namespace relicut
