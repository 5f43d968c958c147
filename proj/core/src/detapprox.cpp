#include "relicut/detapprox.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include "relicut/cut_enum.hpp"
#include "relicut/errors.hpp"
#include "relicut/oracle.hpp"
#include "relicut/parallel.hpp"

namespace relicut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

double log_binom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Depth-first walk over the j-subsets of clauses whose smallest index is
// `first`, accumulating the probability that all of them hold.
class IntersectionWalker {
 public:
  explicit IntersectionWalker(const DnfFormula& f)
      : f_(f), pos_(f.variable_count(), 0), neg_(f.variable_count(), 0) {}

  double sum_from(std::size_t first, unsigned j) {
    total_ = 0.0;
    add(first);
    walk(first + 1, j - 1);
    remove(first);
    return total_;
  }

 private:
  void walk(std::size_t from, unsigned left) {
    if (left == 0) {
      if (conflicts_ == 0 && zeros_ == 0) total_ += std::exp(log_prob_);
      return;
    }
    const std::size_t m = f_.clause_count();
    for (std::size_t i = from; i + left <= m; ++i) {
      add(i);
      walk(i + 1, left - 1);
      remove(i);
    }
  }

  void add(std::size_t i) {
    for (const Literal& lit : f_.clause(i)) {
      auto& mine = lit.positive ? pos_[lit.var] : neg_[lit.var];
      const auto other = lit.positive ? neg_[lit.var] : pos_[lit.var];
      if (mine++ == 0) {
        if (other > 0) ++conflicts_;
        if (other == 0) shift(lit, +1);
      }
    }
  }

  void remove(std::size_t i) {
    for (const Literal& lit : f_.clause(i)) {
      auto& mine = lit.positive ? pos_[lit.var] : neg_[lit.var];
      const auto other = lit.positive ? neg_[lit.var] : pos_[lit.var];
      if (--mine == 0) {
        if (other > 0) --conflicts_;
        if (other == 0) shift(lit, -1);
      }
    }
  }

  void shift(const Literal& lit, int sign) {
    const double q = f_.q(lit.var);
    const double prob = lit.positive ? q : 1.0 - q;
    if (prob == 0.0)
      zeros_ += sign;
    else
      log_prob_ += sign * std::log(prob);
  }

  const DnfFormula& f_;
  std::vector<std::uint32_t> pos_;
  std::vector<std::uint32_t> neg_;
  int conflicts_ = 0;
  int zeros_ = 0;
  double log_prob_ = 0.0;
  double total_ = 0.0;
};

double sigma_term(const DnfFormula& f, unsigned j, double max_subsets, unsigned threads) {
  const std::size_t m = f.clause_count();
  if (j == 0 || j > m) return 0.0;
  const double log_subsets = log_binom(static_cast<double>(m), j);
  if (log_subsets > std::log(max_subsets))
    throw BudgetError("inclusion-exclusion term " + std::to_string(j) + " over " + std::to_string(m) +
                      " events needs about " + fmt(std::exp(log_subsets)) + " intersections, budget " +
                      fmt(max_subsets));
  std::vector<double> partial(m - j + 1, 0.0);
  parallel_for(partial.size(), threads, [&](std::size_t first) {
    IntersectionWalker walker(f);
    partial[first] = walker.sum_from(first, j);
  });
  double total = 0.0;
  for (double x : partial) total += x;
  return total;
}

// Smallest r such that u distinct cuts of at most alpha times the minimum
// force an r-way cut to fail: 2^{r-1} - 1 >= u and r^{2 alpha} > u.
std::uint64_t forced_parts(double alpha, std::uint64_t u) {
  std::uint64_t by_log = 1;
  while ((std::uint64_t{1} << (by_log - 1)) - 1 < u) ++by_log;
  std::uint64_t by_root = 1;
  while (std::pow(static_cast<double>(by_root), 2.0 * alpha) <= static_cast<double>(u) * (1.0 + 1e-12)) ++by_root;
  return std::max(by_log, by_root);
}

// sum_{u=k}^{M} binom(u-2, k-2) * bound on Pr[S_u].
double tail_formula(std::size_t n, double delta, double alpha, std::size_t events, unsigned k) {
  double total = 0.0;
  for (std::uint64_t u = k; u <= events; ++u) {
    const double b = weak_cut_exceedance_bound(n, delta, alpha, u);
    if (b == 0.0) break;
    total += std::exp(log_binom(static_cast<double>(u - 2), k - 2.0) + std::log(b));
  }
  return total;
}

struct Setup {
  DeterministicEstimate result;
  DnfFormula events;
  double c_hat = 0.0;
  double alpha_eff = 1.0;
  bool done = false;
};

Setup prepare(const Multigraph& g, const DetApproxOptions& o, Method method, double min_delta, const char* what) {
  if (!(o.epsilon > 0.0 && o.epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (!(o.alpha_cap >= 1.0)) throw InputError("alpha cap must be at least 1");
  if (!(o.slack >= 1.0)) throw InputError("slack must be at least 1");
  if (o.max_terms < 2) throw InputError("max terms must be at least 2");

  Setup s{DeterministicEstimate{}, DnfFormula::build({}, {}), 0.0, 1.0, false};
  Estimate& e = s.result.estimate;
  e.method = method;
  e.epsilon = o.epsilon;
  e.seed = o.seed;
  e.diagnostics.n = g.vertex_count();
  e.diagnostics.m = g.edge_count();
  s.result.sigma.assign(1, 0.0);
  auto trivial = [&](double value) {
    e.value = value;
    e.certified_error_bound = 0.0;
    s.result.certificate = {2, 0.0, "exact"};
    s.done = true;
    return std::move(s);
  };
  if (g.vertex_count() == 1) return trivial(0.0);
  const WeightedView weights = WeightedView::failure_log(g);
  const MinCutResult mc = min_cut(g, &weights);
  if (!mc.connected) return trivial(1.0);
  e.diagnostics.min_cut = min_cut_value(g);
  e.diagnostics.weighted_min_cut = mc.value;
  e.diagnostics.log_p_c = -mc.value;
  if (mc.value == kInf) return trivial(0.0);
  if (mc.value == 0.0) return trivial(1.0);

  const std::size_t n = g.vertex_count();
  const double ln_n = std::log(static_cast<double>(n));
  const double delta = mc.value / ln_n - 2.0;
  e.diagnostics.delta = delta;
  if (!(delta > min_delta))
    throw RegimeError(std::string(what) + " needs exp(-c_hat) < n^-" + fmt(2.0 + min_delta) + ", got ln p_c = " +
                      fmt(-mc.value) + " >= " + fmt(-(2.0 + min_delta) * ln_n));
  const double alpha = tail_alpha(delta, ln_n, std::log(o.epsilon / 2.0) - mc.value);
  e.diagnostics.alpha = alpha;
  if (alpha > o.alpha_cap)
    throw RegimeError("required alpha = " + fmt(alpha) + " exceeds alpha cap " + fmt(o.alpha_cap));
  s.result.tail_bound = std::exp(std::log1p(2.0 / delta) - alpha * delta * ln_n);

  const bool exhaustive = o.cuts == CutSource::exhaustive || (o.cuts == CutSource::automatic && n <= 10);
  std::vector<CutRecord> cuts;
  if (exhaustive) {
    cuts = exact_cut_list(g, alpha, &weights);
    e.eta = 0.0;
  } else {
    EnumerationOptions eo;
    eo.eta = o.eta;
    eo.seed = o.seed;
    eo.slack = o.slack;
    eo.threads = o.threads;
    CutEnumeration en = enumerate_alpha_min_cuts(g, &weights, alpha, eo);
    e.diagnostics.trials = en.plan.trials;
    cuts = std::move(en.cuts);
    e.eta = o.eta;
  }
  double worst = mc.value;
  for (const CutRecord& c : cuts) worst = std::max(worst, c.value);
  s.alpha_eff = std::max(alpha, worst / mc.value);
  s.events = build_cut_failure_formula(cuts, g);
  s.c_hat = mc.value;
  e.diagnostics.cuts = s.events.clause_count();
  return s;
}

DeterministicEstimate conclude(Setup s, unsigned k, double value, double formula, double next_term,
                               double wall_ms) {
  DeterministicEstimate& r = s.result;
  r.certificate.k = k;
  if (k > s.events.clause_count()) {
    r.certificate.bound = 0.0;
    r.certificate.formula_source = "exact";
  } else if (next_term < formula) {
    r.certificate.bound = next_term;
    r.certificate.formula_source = "next-term";
  } else {
    r.certificate.bound = formula;
    r.certificate.formula_source = "tail-formula";
  }
  r.estimate.value = std::clamp(value, 0.0, 1.0);
  r.estimate.certified_error_bound = r.certificate.bound + r.tail_bound;
  r.estimate.diagnostics.wall_ms = wall_ms;
  return std::move(r);
}

double now_ms() {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

}  // namespace

double weak_cut_exceedance_bound(std::size_t n, double delta, double alpha, std::uint64_t u) {
  if (u == 0) return 1.0;
  const std::uint64_t r = forced_parts(alpha, u);
  if (r > n) return 0.0;
  return std::min(1.0, std::exp(-static_cast<double>(r) * delta / 2.0 * std::log(static_cast<double>(n))));
}

DeterministicEstimate heuristic_sum_fail(const Multigraph& g, const DetApproxOptions& o) {
  const double t0 = now_ms();
  Setup s = prepare(g, o, Method::heuristic_sum, 2.0, "heuristic sum");
  if (s.done) {
    s.result.estimate.diagnostics.wall_ms = now_ms() - t0;
    return std::move(s.result);
  }
  const std::size_t m = s.events.clause_count();
  double sigma1 = 0.0;
  for (std::size_t i = 0; i < m; ++i) sigma1 += std::exp(s.events.log_clause_weight(i));
  const double formula = tail_formula(g.vertex_count(), s.result.estimate.diagnostics.delta, s.alpha_eff, m, 2);
  double sigma2 = kInf;
  try {
    sigma2 = sigma_term(s.events, 2, o.max_subsets, o.threads);
  } catch (const BudgetError&) {
    // The formula alone still certifies the sum.
  }
  s.result.sigma = {0.0, sigma1};
  if (sigma2 < kInf) s.result.sigma.push_back(sigma2);
  return conclude(std::move(s), 2, sigma1, formula, sigma2, now_ms() - t0);
}

DeterministicEstimate pas_fail(const Multigraph& g, const DetApproxOptions& o) {
  const double t0 = now_ms();
  Setup s = prepare(g, o, Method::pas_incl_excl, 0.0, "inclusion-exclusion");
  if (s.done) {
    s.result.estimate.diagnostics.wall_ms = now_ms() - t0;
    return std::move(s.result);
  }
  const std::size_t n = g.vertex_count();
  const double delta = s.result.estimate.diagnostics.delta;
  // FAIL is at least the minimum cut's failure probability and, once sigma_2
  // is known, at least sigma_1 - sigma_2.
  double target = o.epsilon / 2.0 * std::exp(-s.c_hat);
  const std::size_t m = s.events.clause_count();
  std::vector<double>& sigma = s.result.sigma;
  sigma.push_back(sigma_term(s.events, 1, o.max_subsets, o.threads));
  double partial = sigma[1];
  for (unsigned k = 2;; ++k) {
    if (k > o.max_terms)
      throw BudgetError("inclusion-exclusion did not certify eps/2 FAIL >= " + fmt(target) + " within " +
                        std::to_string(o.max_terms) + " terms over " + std::to_string(m) + " events");
    const double formula = tail_formula(n, delta, s.alpha_eff, m, k);
    if (formula <= target) return conclude(std::move(s), k, partial, formula, kInf, now_ms() - t0);
    const double next = sigma_term(s.events, k, o.max_subsets, o.threads);
    sigma.push_back(next);
    if (k == 2) target = std::max(target, o.epsilon / 2.0 * (sigma[1] - next));
    if (next <= target) return conclude(std::move(s), k, partial, formula, next, now_ms() - t0);
    partial += (k % 2 == 0 ? -1.0 : 1.0) * next;
  }
}

std::vector<double> inclusion_exclusion_terms(const DnfFormula& events, unsigned upto, double max_subsets,
                                              unsigned threads) {
  std::vector<double> sigma(upto + 1, 0.0);
  for (unsigned j = 1; j <= upto; ++j) sigma[j] = sigma_term(events, j, max_subsets, threads);
  return sigma;
}

TruncationCheck truncation_error_exact(const DnfFormula& events, unsigned k) {
  if (k < 2) throw InputError("truncation point k must be at least 2");
  TruncationCheck check;
  const std::vector<double> dist = satisfied_count_distribution(events, 20);
  const std::size_t m = events.clause_count();
  const unsigned terms = static_cast<unsigned>(std::min<std::size_t>(k - 1, m));
  const std::vector<double> sigma = inclusion_exclusion_terms(events, terms);
  for (unsigned j = 1; j <= terms; ++j) check.truncated += (j % 2 == 1 ? 1.0 : -1.0) * sigma[j];
  for (std::size_t u = 1; u < dist.size(); ++u) check.exact_union += dist[u];
  check.error = std::abs(check.truncated - check.exact_union);
  // s[u] = Pr[S_u] = Pr[at least u events].
  std::vector<double> s(dist.size() + 1, 0.0);
  for (std::size_t u = dist.size(); u-- > 0;) s[u] = s[u + 1] + dist[u];
  for (std::size_t u = k; u < dist.size(); ++u)
    check.lemma_bound += std::round(std::exp(log_binom(static_cast<double>(u - 2), k - 2.0))) * s[u];
  return check;
}

}  // namespace relicut
