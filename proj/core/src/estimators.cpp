#include "relicut/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include "monte_carlo.hpp"
#include "relicut/cut_enum.hpp"
#include "relicut/dnf.hpp"
#include "relicut/errors.hpp"

namespace relicut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void validate(const EstimateOptions& o) {
  if (!(o.epsilon > 0.0 && o.epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (!(o.eta > 0.0 && o.eta < 1.0)) throw InputError("eta must lie in (0, 1)");
  if (!(o.alpha_cap >= 1.0)) throw InputError("alpha cap must be at least 1");
  if (!(o.slack >= 1.0)) throw InputError("slack must be at least 1");
}

Estimate start(const EstimateOptions& o, std::size_t n, std::size_t m) {
  validate(o);
  Estimate e;
  e.epsilon = o.epsilon;
  e.eta = o.eta;
  e.seed = o.seed;
  e.diagnostics.n = n;
  e.diagnostics.m = m;
  return e;
}

Estimate finish(Estimate e, const Stopwatch& clock) {
  e.value = std::clamp(e.value, 0.0, 1.0);
  e.diagnostics.wall_ms = clock.ms();
  return e;
}

Estimate exact(Estimate e, double value, const Stopwatch& clock) {
  e.value = value;
  e.method = Method::exact_oracle;
  return finish(std::move(e), clock);
}

bool use_monte_carlo(const EstimateOptions& o, double log_p_c, double log_threshold) {
  switch (o.branch) {
    case Branch::monte_carlo: return true;
    case Branch::cut_enum: return false;
    case Branch::automatic: break;
  }
  return decide_regime(log_p_c, log_threshold).monte_carlo;
}

template <class MakeTrial>
void run_mc(Estimate& e, const EstimateOptions& o, double log_lower_bound, MakeTrial&& make_trial) {
  detail::MonteCarloPlan plan;
  plan.epsilon = o.epsilon;
  plan.eta = o.eta;
  plan.lower_bound = std::max(std::exp(log_lower_bound), 1e-300);
  plan.seed = o.seed;
  plan.stream = Stream::monte_carlo;
  plan.threads = o.threads;
  const detail::MonteCarloResult r = detail::run_monte_carlo(plan, std::forward<MakeTrial>(make_trial));
  e.value = r.value;
  e.method = Method::monte_carlo;
  e.diagnostics.trials = r.trials;
}

// delta from log_p_c = -(2 + delta) log N; refuses when the enumeration
// analysis does not apply.
double small_delta(double log_p_c, double log_count_base, const std::string& what) {
  const double delta = -log_p_c / log_count_base - 2.0;
  if (!(delta > 0.0))
    throw RegimeError(what + ": cut enumeration needs p_c < N^-2, but ln p_c = " + fmt(log_p_c) +
                      " >= -2 ln N = " + fmt(-2.0 * log_count_base));
  return delta;
}

void check_alpha(double alpha, const EstimateOptions& o) {
  if (alpha > o.alpha_cap)
    throw RegimeError("required alpha = " + fmt(alpha) + " exceeds alpha cap " + fmt(o.alpha_cap) +
                      " (raise --alpha-cap or epsilon)");
}

EnumerationOptions enumeration_options(const EstimateOptions& o) {
  EnumerationOptions eo;
  eo.eta = o.eta / 2.0;
  eo.seed = o.seed;
  eo.slack = o.slack;
  eo.threads = o.threads;
  return eo;
}

// Second half of the enumeration pipeline: DNF estimate at eps/2, eta/2.
void run_dnf(Estimate& e, const DnfFormula& f, const EstimateOptions& o) {
  e.method = Method::cut_enum_dnf;
  bool any = false;
  for (std::size_t i = 0; i < f.clause_count() && !any; ++i) any = f.log_clause_weight(i) > -kInf;
  if (!any) {
    e.value = 0.0;
    return;
  }
  const CoverageEstimate c = estimate_union_probability(f, o.epsilon / 2.0, o.eta / 2.0, o.seed, o.threads);
  e.value = c.value;
  e.diagnostics.trials = c.samples;
}

// Connectivity failure trial with early exit once everything is joined.
auto disconnect_trial(const Multigraph& g) {
  return [&g, sets = DisjointSets(g.vertex_count())](Rng& rng) mutable {
    sets.reset(g.vertex_count());
    for (const Edge& e : g.edges()) {
      if (rng.bernoulli(e.p_fail)) continue;
      if (sets.unite(e.u, e.v) && sets.set_count() == 1) return false;
    }
    return sets.set_count() > 1;
  };
}

bool graph_connected(const Multigraph& g) {
  const std::vector<std::uint8_t> all(g.edge_count(), 1);
  return is_connected(g, all);
}

double log_n(const Multigraph& g) { return std::log(static_cast<double>(g.vertex_count())); }

// Pr[fewer than k of the given edges survive].
double prob_fewer_survive(const Multigraph& g, std::span<const EdgeId> edges, unsigned k) {
  std::vector<double> dist(edges.size() + 1, 0.0);
  dist[0] = 1.0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double q = 1.0 - g.edge(edges[i]).p_fail;
    for (std::size_t s = i + 1; s > 0; --s) dist[s] = dist[s] * (1.0 - q) + dist[s - 1] * q;
    dist[0] *= 1.0 - q;
  }
  double total = 0.0;
  for (std::size_t s = 0; s < k && s < dist.size(); ++s) total += dist[s];
  return total;
}

// ln of binom(v, k-1) p^{v-k+1} for real v: the chance that a cut of v edges
// keeps fewer than k, up to the union bound over the surviving sets.
double log_k_fail_bound(double v, unsigned k, double log_p) {
  return std::lgamma(v + 1.0) - std::lgamma(static_cast<double>(k)) - std::lgamma(v - k + 2.0) +
         (v - k + 1.0) * log_p;
}

// Tail bound for k-connectivity: cuts above alpha c. Cut j (by value) has
// value above c ln j / (2 ln n), so the sum is at most
// (n^{2 alpha} + 1) g(alpha c) + integral_{alpha}^{inf} 2 ln n n^{2t} g(tc) dt.
// Returns +inf if the integrand is not yet decreasing at alpha.
double kconn_tail(double alpha, double c, unsigned k, double log_p, double ln_n) {
  auto log_f = [&](double t) { return 2.0 * t * ln_n + log_k_fail_bound(t * c, k, log_p); };
  const double slope = 2.0 * ln_n + c * ((k - 1.0) / (alpha * c - k + 2.0) + log_p);
  if (!(slope < 0.0)) return kInf;
  const double head = std::log1p(std::exp(2.0 * alpha * ln_n)) + log_k_fail_bound(alpha * c, k, log_p);
  // Upper Riemann sum of a decreasing integrand.
  const double h = std::min(0.01, 0.05 / -slope);
  double sum = 0.0;
  const double first = log_f(alpha);
  for (int i = 0; i < 1000000; ++i) {
    const double term = std::exp(log_f(alpha + i * h) - first);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  const double integral = std::log(2.0 * ln_n * h * sum) + first;
  return std::exp(head) + std::exp(integral);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::monte_carlo: return "monte_carlo";
    case Method::cut_enum_dnf: return "cut_enum_dnf";
    case Method::exact_oracle: return "exact_oracle";
    case Method::heuristic_sum: return "heuristic_sum";
    case Method::pas_incl_excl: return "pas_incl_excl";
  }
  return "unknown";
}

RegimeDecision decide_regime(double log_p_c, double log_threshold) {
  return {log_p_c, log_threshold, log_p_c >= log_threshold};
}

double tail_alpha(double delta, double log_count_base, double log_target) {
  const double alpha = (std::log1p(2.0 / delta) - log_target) / (delta * log_count_base);
  return std::max(1.0, alpha);
}

namespace {

enum class FailPath { automatic, monte_carlo, small };

Estimate estimate_fail_impl(const Multigraph& g, const EstimateOptions& o, FailPath path) {
  Stopwatch clock;
  Estimate e = start(o, g.vertex_count(), g.edge_count());
  if (g.vertex_count() == 1) return exact(std::move(e), 0.0, clock);
  const MinCutResult unit = min_cut(g);
  if (!unit.connected) return exact(std::move(e), 1.0, clock);
  const WeightedView weights = WeightedView::failure_log(g);
  const double c_hat = min_cut(g, &weights).value;
  e.diagnostics.min_cut = unit.value;
  e.diagnostics.weighted_min_cut = c_hat;
  e.diagnostics.log_p_c = -c_hat;
  if (c_hat == kInf) return exact(std::move(e), 0.0, clock);
  if (c_hat == 0.0) return exact(std::move(e), 1.0, clock);
  const double ln_n = log_n(g);
  e.diagnostics.delta = c_hat / ln_n - 2.0;

  bool mc = path == FailPath::monte_carlo;
  if (path == FailPath::automatic) mc = use_monte_carlo(o, -c_hat, -4.0 * ln_n);
  if (mc) {
    run_mc(e, o, -c_hat, [&] { return disconnect_trial(g); });
    return finish(std::move(e), clock);
  }
  const double delta = small_delta(-c_hat, ln_n, "all-terminal reliability");
  const double alpha = tail_alpha(delta, ln_n, std::log(o.epsilon / 2.0) - c_hat);
  e.diagnostics.alpha = alpha;
  check_alpha(alpha, o);
  const CutEnumeration cuts = enumerate_alpha_min_cuts(g, &weights, alpha, enumeration_options(o));
  e.diagnostics.cuts = cuts.cuts.size();
  run_dnf(e, build_cut_failure_formula(cuts.cuts, g), o);
  return finish(std::move(e), clock);
}

}  // namespace

Estimate estimate_fail(const Multigraph& g, const EstimateOptions& options) {
  return estimate_fail_impl(g, options, FailPath::automatic);
}

Estimate estimate_fail_monte_carlo(const Multigraph& g, const EstimateOptions& options) {
  return estimate_fail_impl(g, options, FailPath::monte_carlo);
}

Estimate estimate_fail_small(const Multigraph& g, const EstimateOptions& options) {
  if (g.vertex_count() > 1) {
    const WeightedView weights = WeightedView::failure_log(g);
    const MinCutResult mc = min_cut(g, &weights);
    const double ln_n = log_n(g);
    if (mc.connected && mc.value < kInf && -mc.value >= -4.0 * ln_n)
      throw RegimeError("all-terminal reliability: small-failure branch needs exp(-c_hat) < n^-4, got ln p_c = " +
                        fmt(-mc.value) + " >= -4 ln n = " + fmt(-4.0 * ln_n));
  }
  return estimate_fail_impl(g, options, FailPath::small);
}

Estimate estimate_multiterminal(const Multigraph& g, std::span<const VertexId> terminals, const EstimateOptions& o) {
  Stopwatch clock;
  Estimate e = start(o, g.vertex_count(), g.edge_count());
  std::vector<VertexId> k(terminals.begin(), terminals.end());
  for (VertexId t : k)
    if (t >= g.vertex_count()) throw InputError("terminal " + std::to_string(t + 1) + " is not a vertex");
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  if (k.size() < 2) throw InputError("need at least 2 distinct terminals");

  const std::vector<std::uint8_t> all(g.edge_count(), 1);
  if (!terminals_connected(g, all, k)) return exact(std::move(e), 1.0, clock);
  const WeightedView weights = WeightedView::failure_log(g);
  const WeightedView unit = WeightedView::unit(g);
  double c_k = kInf, unit_k = kInf;
  for (std::size_t i = 1; i < k.size(); ++i) {
    c_k = std::min(c_k, min_st_cut_value(g, weights, k[0], k[i]));
    unit_k = std::min(unit_k, min_st_cut_value(g, unit, k[0], k[i]));
  }
  e.diagnostics.min_cut = unit_k;
  e.diagnostics.weighted_min_cut = c_k;
  e.diagnostics.log_p_c = -c_k;
  if (c_k == kInf) return exact(std::move(e), 0.0, clock);
  if (c_k == 0.0) return exact(std::move(e), 1.0, clock);
  const double ln_n = log_n(g);

  if (use_monte_carlo(o, -c_k, -4.0 * ln_n)) {
    run_mc(e, o, -c_k, [&] {
      return [&g, &k, sets = DisjointSets(g.vertex_count())](Rng& rng) mutable {
        sets.reset(g.vertex_count());
        for (const Edge& edge : g.edges())
          if (!rng.bernoulli(edge.p_fail)) sets.unite(edge.u, edge.v);
        for (VertexId t : k)
          if (!sets.same(t, k[0])) return true;
        return false;
      };
    });
    return finish(std::move(e), clock);
  }
  // Tail over all cuts above alpha c_hat, measured against exp(-c_K).
  if (!graph_connected(g))
    throw RegimeError("multiterminal enumeration branch needs a connected graph");
  const double c_hat = min_cut(g, &weights).value;
  const double delta = small_delta(-c_hat, ln_n, "multiterminal reliability");
  e.diagnostics.delta = delta;
  const double alpha = tail_alpha(delta, ln_n, std::log(o.epsilon / 2.0) - c_k);
  e.diagnostics.alpha = alpha;
  check_alpha(alpha, o);
  CutEnumeration cuts = enumerate_alpha_min_cuts(g, &weights, alpha, enumeration_options(o));
  std::erase_if(cuts.cuts, [&](const CutRecord& cut) {
    for (VertexId t : k)
      if (cut.labels[t] != cut.labels[k[0]]) return false;
    return true;
  });
  e.diagnostics.cuts = cuts.cuts.size();
  run_dnf(e, build_cut_failure_formula(cuts.cuts, g), o);
  return finish(std::move(e), clock);
}

Estimate estimate_kconn_failure(const Multigraph& g, unsigned k, const EstimateOptions& o) {
  if (k == 0) throw InputError("k must be at least 1");
  if (k == 1) return estimate_fail(g, o);
  Stopwatch clock;
  Estimate e = start(o, g.vertex_count(), g.edge_count());
  if (g.vertex_count() == 1) return exact(std::move(e), 0.0, clock);
  const MinCutResult unit = min_cut(g);
  e.diagnostics.min_cut = unit.value;
  if (!unit.connected || unit.value < k) return exact(std::move(e), 1.0, clock);

  // Lower bound: the unweighted and the weighted minimum cut each keep fewer
  // than k edges with at least this probability.
  const WeightedView weights = WeightedView::failure_log(g);
  const MinCutResult weighted = min_cut(g, &weights);
  e.diagnostics.weighted_min_cut = weighted.value;
  double lower = 0.0;
  for (const MinCutResult* cut : {&unit, &weighted}) {
    if (cut->value == kInf) continue;
    std::vector<std::uint32_t> labels(cut->side.begin(), cut->side.end());
    lower = std::max(lower, prob_fewer_survive(g, crossing_edges(g, labels), k));
  }
  if (lower == 0.0) {
    bool any = false;
    for (const Edge& edge : g.edges()) any = any || edge.p_fail > 0.0;
    if (!any) return exact(std::move(e), 0.0, clock);
    throw RegimeError("k-connectivity: the minimum cuts never lose k edges, no positive lower bound");
  }
  const double log_lower = std::log(lower);
  e.diagnostics.log_p_c = log_lower;
  const double ln_n = log_n(g);

  if (use_monte_carlo(o, log_lower, -4.0 * ln_n)) {
    run_mc(e, o, log_lower, [&] {
      return [&g, k, alive = std::vector<std::uint8_t>(g.edge_count())](Rng& rng) mutable {
        for (EdgeId id = 0; id < g.edge_count(); ++id) alive[id] = !rng.bernoulli(g.edge(id).p_fail);
        return !is_k_edge_connected(g, alive, k);
      };
    });
    return finish(std::move(e), clock);
  }
  if (!g.uniform_probability())
    throw RegimeError("k-connectivity enumeration branch needs a uniform failure probability");
  const double p = g.edge(0).p_fail;
  const double log_p = std::log(p);
  const double c = unit.value;
  e.diagnostics.delta = c * -log_p / ln_n - 2.0;
  const double target = std::log(o.epsilon / 2.0) + log_lower;
  double alpha = 1.0;
  for (; alpha <= 12.0; alpha += 0.005)
    if (std::log(kconn_tail(alpha, c, k, log_p, ln_n)) <= target) break;
  e.diagnostics.alpha = alpha;
  if (alpha > 12.0)
    throw RegimeError("k-connectivity: no alpha <= 12 bounds the tail by eps/2 * " + fmt(lower));
  check_alpha(alpha, o);
  const CutEnumeration cuts = enumerate_alpha_min_cuts(g, nullptr, alpha, enumeration_options(o));
  e.diagnostics.cuts = cuts.cuts.size();
  run_dnf(e, build_k_failure_formula(cuts.cuts, g, k), o);
  return finish(std::move(e), clock);
}

Estimate estimate_eulerian_strong_failure(const Digraph& g, const EstimateOptions& o) {
  Stopwatch clock;
  require_eulerian(g);
  Estimate e = start(o, g.vertex_count(), g.arc_count());
  if (g.vertex_count() == 1) return exact(std::move(e), 0.0, clock);
  const std::vector<std::uint8_t> all(g.arc_count(), 1);
  if (!is_strongly_connected(g, all)) return exact(std::move(e), 1.0, clock);
  const Multigraph h = g.underlying();
  const double c_hat = min_directed_cut_log_weight(g);
  e.diagnostics.min_cut = min_cut(h).value / 2.0;
  e.diagnostics.weighted_min_cut = c_hat;
  e.diagnostics.log_p_c = -c_hat;
  if (c_hat == kInf) return exact(std::move(e), 0.0, clock);
  if (c_hat == 0.0) return exact(std::move(e), 1.0, clock);
  const double ln_n = log_n(h);

  if (use_monte_carlo(o, -c_hat, -4.0 * ln_n)) {
    run_mc(e, o, -c_hat, [&] {
      return [&g, strong = StrongConnectivity(g.vertex_count()),
              arcs = std::vector<std::pair<VertexId, VertexId>>()](Rng& rng) mutable {
        arcs.clear();
        for (const Arc& a : g.arcs())
          if (!rng.bernoulli(a.p_fail)) arcs.emplace_back(a.tail, a.head);
        return !strong(arcs);
      };
    });
    return finish(std::move(e), clock);
  }
  if (!g.uniform_probability())
    throw RegimeError("Eulerian enumeration branch needs a uniform failure probability");
  const double delta = small_delta(-c_hat, ln_n, "Eulerian strong connectivity");
  e.diagnostics.delta = delta;
  // Twice as many directed cuts as undirected ones: the tail bound doubles.
  const double alpha = tail_alpha(delta, ln_n, std::log(o.epsilon / 2.0) - c_hat - std::log(2.0));
  e.diagnostics.alpha = alpha;
  check_alpha(alpha, o);
  const DirectedCutEnumeration cuts = enumerate_directed_eulerian_cuts(g, alpha, enumeration_options(o));
  e.diagnostics.cuts = cuts.cuts.size();
  std::vector<double> q(g.arc_count());
  for (EdgeId a = 0; a < g.arc_count(); ++a) q[a] = g.arc(a).p_fail;
  std::vector<Clause> clauses;
  for (const DirectedCutRecord& cut : cuts.cuts) {
    Clause clause;
    for (EdgeId a : cut.arc_ids) clause.push_back({a, true});
    clauses.push_back(std::move(clause));
  }
  run_dnf(e, DnfFormula::build(std::move(q), std::move(clauses)), o);
  return finish(std::move(e), clock);
}

Estimate estimate_orientation_failure(const Multigraph& g, const EstimateOptions& o) {
  Stopwatch clock;
  Estimate e = start(o, g.vertex_count(), g.edge_count());
  if (g.vertex_count() == 1) return exact(std::move(e), 0.0, clock);
  const MinCutResult unit = min_cut(g);
  if (!unit.connected) return exact(std::move(e), 1.0, clock);
  const double c = unit.value;
  const double ln2 = std::log(2.0);
  e.diagnostics.min_cut = c;
  e.diagnostics.weighted_min_cut = c * ln2;
  e.diagnostics.log_p_c = -c * ln2;
  // A bridge points one way in every orientation.
  if (c == 1.0) return exact(std::move(e), 1.0, clock);
  const double ln_n = log_n(g);
  // Each minimum cut is one-directional with probability 2 * 2^-c.
  const double log_lower = (1.0 - c) * ln2;

  if (use_monte_carlo(o, -c * ln2, -4.0 * ln_n)) {
    run_mc(e, o, log_lower, [&] {
      return [&g, strong = StrongConnectivity(g.vertex_count()),
              arcs = std::vector<std::pair<VertexId, VertexId>>()](Rng& rng) mutable {
        arcs.clear();
        for (const Edge& edge : g.edges()) {
          if (rng() >> 63)
            arcs.emplace_back(edge.u, edge.v);
          else
            arcs.emplace_back(edge.v, edge.u);
        }
        return !strong(arcs);
      };
    });
    return finish(std::move(e), clock);
  }
  const double delta = small_delta(-c * ln2, ln_n, "random orientation");
  e.diagnostics.delta = delta;
  const double alpha = tail_alpha(delta, ln_n, std::log(o.epsilon / 2.0) + log_lower - ln2);
  e.diagnostics.alpha = alpha;
  check_alpha(alpha, o);
  const CutEnumeration cuts = enumerate_alpha_min_cuts(g, nullptr, alpha, enumeration_options(o));
  e.diagnostics.cuts = cuts.cuts.size();
  // x_e true: edge e points from its first endpoint to its second.
  std::vector<Clause> clauses;
  for (const CutRecord& cut : cuts.cuts) {
    for (bool towards_one : {true, false}) {
      Clause clause;
      for (EdgeId id : cut.edge_ids) {
        const bool u_in_zero = cut.labels[g.edge(id).u] == 0;
        clause.push_back({id, u_in_zero == towards_one});
      }
      clauses.push_back(std::move(clause));
    }
  }
  run_dnf(e, DnfFormula::build(std::vector<double>(g.edge_count(), 0.5), std::move(clauses)), o);
  return finish(std::move(e), clock);
}

Estimate estimate_rway_failure(const Multigraph& g, unsigned r, const EstimateOptions& o) {
  if (r < 2) throw InputError("r must be at least 2");
  if (r > g.vertex_count())
    throw InputError("r = " + std::to_string(r) + " exceeds vertex count " + std::to_string(g.vertex_count()));
  if (r == 2) return estimate_fail(g, o);
  Stopwatch clock;
  Estimate e = start(o, g.vertex_count(), g.edge_count());
  const std::vector<std::uint8_t> all(g.edge_count(), 1);
  if (component_count(g, all) >= r) return exact(std::move(e), 1.0, clock);
  const WeightedView weights = WeightedView::failure_log(g);
  const WeightedView unit = WeightedView::unit(g);
  const EnumerationOptions eo = enumeration_options(o);
  const double c_hat = min_rway_cut_value(g, weights, r, eo);
  e.diagnostics.min_cut = min_rway_cut_value(g, unit, r, eo);
  e.diagnostics.weighted_min_cut = c_hat;
  e.diagnostics.log_p_c = -c_hat;
  if (c_hat == kInf) return exact(std::move(e), 0.0, clock);
  if (c_hat == 0.0) return exact(std::move(e), 1.0, clock);
  const double log_base = (r - 1.0) * std::log(static_cast<double>(r) * g.vertex_count());

  if (use_monte_carlo(o, -c_hat, -4.0 * log_base)) {
    run_mc(e, o, -c_hat, [&] {
      return [&g, r, sets = DisjointSets(g.vertex_count())](Rng& rng) mutable {
        sets.reset(g.vertex_count());
        for (const Edge& edge : g.edges()) {
          if (rng.bernoulli(edge.p_fail)) continue;
          if (sets.unite(edge.u, edge.v) && sets.set_count() < r) return false;
        }
        return sets.set_count() >= r;
      };
    });
    return finish(std::move(e), clock);
  }
  if (!graph_connected(g)) throw RegimeError("r-way enumeration branch needs a connected graph");
  const double delta = small_delta(-c_hat, log_base, "r-way partition");
  e.diagnostics.delta = delta;
  const double alpha = tail_alpha(delta, log_base, std::log(o.epsilon / 2.0) - c_hat);
  e.diagnostics.alpha = alpha;
  check_alpha(alpha, o);
  const CutEnumeration cuts = enumerate_alpha_min_rway_cuts(g, &weights, r, alpha, eo);
  e.diagnostics.cuts = cuts.cuts.size();
  run_dnf(e, build_cut_failure_formula(cuts.cuts, g), o);
  return finish(std::move(e), clock);
}

}  // namespace relicut
