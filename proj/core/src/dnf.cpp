#include "relicut/dnf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "monte_carlo.hpp"
#include "relicut/errors.hpp"
#include "relicut/parallel.hpp"
#include "relicut/random.hpp"

namespace relicut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double log_literal(double q, bool positive) {
  const double p = positive ? q : 1.0 - q;
  return p > 0.0 ? std::log(p) : -kInf;
}

struct MaskClause {
  std::uint32_t pos = 0;
  std::uint32_t neg = 0;
};

// Clauses rewritten over the compact index of the occurring variables.
struct Compiled {
  std::vector<double> q;
  std::vector<MaskClause> clauses;
};

Compiled compile(const DnfFormula& f, unsigned max_variables) {
  if (max_variables > 25) max_variables = 25;
  std::vector<std::uint32_t> index(f.variable_count(), UINT32_MAX);
  Compiled c;
  for (const Clause& clause : f.clauses())
    for (const Literal& lit : clause)
      if (index[lit.var] == UINT32_MAX) {
        index[lit.var] = static_cast<std::uint32_t>(c.q.size());
        c.q.push_back(f.q(lit.var));
      }
  if (c.q.size() > max_variables)
    throw BudgetError("exact DNF evaluation limited to " + std::to_string(max_variables) + " variables, formula has " +
                      std::to_string(c.q.size()));
  for (const Clause& clause : f.clauses()) {
    MaskClause m;
    for (const Literal& lit : clause) (lit.positive ? m.pos : m.neg) |= 1u << index[lit.var];
    c.clauses.push_back(m);
  }
  return c;
}

// Probability of every assignment over `bits` variables, as a product of two
// half tables.
template <class Fn>
void for_each_assignment(const std::vector<double>& q, Fn&& fn) {
  const std::size_t bits = q.size();
  const std::size_t low_bits = bits / 2;
  auto table = [&](std::size_t from, std::size_t count) {
    std::vector<double> t(std::size_t{1} << count, 1.0);
    for (std::size_t mask = 0; mask < t.size(); ++mask)
      for (std::size_t i = 0; i < count; ++i) t[mask] *= (mask >> i & 1) ? q[from + i] : 1.0 - q[from + i];
    return t;
  };
  const std::vector<double> lo = table(0, low_bits);
  const std::vector<double> hi = table(low_bits, bits - low_bits);
  for (std::size_t h = 0; h < hi.size(); ++h) {
    if (hi[h] == 0.0) continue;
    for (std::size_t l = 0; l < lo.size(); ++l) {
      const double p = hi[h] * lo[l];
      if (p != 0.0) fn(static_cast<std::uint32_t>(h << low_bits | l), p);
    }
  }
}

}  // namespace

DnfFormula DnfFormula::build(std::vector<double> q, std::vector<Clause> clauses) {
  for (std::size_t v = 0; v < q.size(); ++v)
    if (!(q[v] >= 0.0 && q[v] <= 1.0))
      throw InputError("variable " + std::to_string(v) + ": probability outside [0, 1]");
  DnfFormula f;
  f.log_weight_.reserve(clauses.size());
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const Clause& clause = clauses[i];
    if (clause.empty()) throw InputError("clause " + std::to_string(i) + " is empty");
    std::set<std::uint32_t> vars;
    double lw = 0.0;
    for (const Literal& lit : clause) {
      if (lit.var >= q.size()) throw InputError("clause " + std::to_string(i) + ": undefined variable");
      if (!vars.insert(lit.var).second)
        throw InputError("clause " + std::to_string(i) + ": repeated variable " + std::to_string(lit.var));
      lw += log_literal(q[lit.var], lit.positive);
    }
    f.log_weight_.push_back(lw);
  }
  f.q_ = std::move(q);
  f.clauses_ = std::move(clauses);
  return f;
}

std::vector<double> satisfied_count_distribution(const DnfFormula& f, unsigned max_variables) {
  const Compiled c = compile(f, max_variables);
  std::vector<double> dist(c.clauses.size() + 1, 0.0);
  for_each_assignment(c.q, [&](std::uint32_t mask, double p) {
    std::size_t count = 0;
    for (const MaskClause& m : c.clauses) count += (mask & m.pos) == m.pos && (mask & m.neg) == 0;
    dist[count] += p;
  });
  return dist;
}

double exact_union_probability(const DnfFormula& f, unsigned max_variables) {
  const Compiled c = compile(f, max_variables);
  double total = 0.0;
  for_each_assignment(c.q, [&](std::uint32_t mask, double p) {
    for (const MaskClause& m : c.clauses)
      if ((mask & m.pos) == m.pos && (mask & m.neg) == 0) {
        total += p;
        return;
      }
  });
  return std::min(total, 1.0);
}

namespace {

// Draws clause i with probability w_i / W, then an assignment conditioned on
// clause i, and reports whether i is the lowest-indexed satisfied clause.
class CoverageSampler {
 public:
  explicit CoverageSampler(const DnfFormula& f) : f_(&f) {
    double max_log = -kInf;
    for (std::size_t i = 0; i < f.clause_count(); ++i)
      if (f.log_clause_weight(i) > -kInf) {
        live_.push_back(static_cast<std::uint32_t>(i));
        max_log = std::max(max_log, f.log_clause_weight(i));
      }
    if (live_.empty()) throw InputError("every clause has probability 0");
    cumulative_.resize(live_.size());
    for (std::size_t j = 0; j < live_.size(); ++j) {
      scaled_total_ += std::exp(f.log_clause_weight(live_[j]) - max_log);
      cumulative_[j] = scaled_total_;
    }
    max_weight_ = std::exp(max_log);
    total_weight_ = std::exp(max_log + std::log(scaled_total_));
  }

  std::size_t live_clauses() const { return live_.size(); }
  double max_weight() const { return max_weight_; }
  double total_weight() const { return total_weight_; }

  // Per-worker sampling state.
  auto make_trial() const {
    return [this, value = std::vector<std::uint8_t>(f_->variable_count(), 0),
            stamp = std::vector<std::uint32_t>(f_->variable_count(), 0),
            generation = std::uint32_t{0}](Rng& rng) mutable {
      ++generation;
      const double u = rng.uniform() * scaled_total_;
      const std::size_t j = std::min<std::size_t>(
          std::upper_bound(cumulative_.begin(), cumulative_.end(), u) - cumulative_.begin(), live_.size() - 1);
      for (const Literal& lit : f_->clause(live_[j])) {
        stamp[lit.var] = generation;
        value[lit.var] = lit.positive;
      }
      for (std::size_t k = 0; k < j; ++k) {
        bool sat = true;
        for (const Literal& lit : f_->clause(live_[k])) {
          if (stamp[lit.var] != generation) {
            stamp[lit.var] = generation;
            value[lit.var] = rng.bernoulli(f_->q(lit.var));
          }
          if ((value[lit.var] != 0) != lit.positive) {
            sat = false;
            break;
          }
        }
        if (sat) return false;
      }
      return true;
    };
  }

 private:
  const DnfFormula* f_;
  std::vector<std::uint32_t> live_;
  std::vector<double> cumulative_;
  double scaled_total_ = 0.0;
  double max_weight_ = 0.0;
  double total_weight_ = 0.0;
};

}  // namespace

CoverageEstimate estimate_union_probability(const DnfFormula& f, double epsilon, double eta, std::uint64_t seed,
                                            unsigned threads) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (!(eta > 0.0 && eta < 1.0)) throw InputError("eta must lie in (0, 1)");
  const CoverageSampler sampler(f);

  // The score has mean Pr[F] / W >= 1 / M, which caps the sample count at
  // 3 M ln(4/eta) / eps^2; the stopping rule usually ends far earlier.
  detail::MonteCarloPlan plan;
  plan.epsilon = epsilon;
  plan.eta = eta;
  plan.lower_bound = 1.0 / static_cast<double>(sampler.live_clauses());
  plan.seed = seed;
  plan.stream = Stream::dnf_sampling;
  plan.threads = threads;
  const detail::MonteCarloResult mc = detail::run_monte_carlo(plan, [&] { return sampler.make_trial(); });

  CoverageEstimate est;
  est.epsilon = epsilon;
  est.eta = eta;
  est.samples = mc.trials;
  est.max_weight = sampler.max_weight();
  est.total_weight = sampler.total_weight();
  est.value = std::clamp(est.total_weight * mc.value, est.max_weight, std::min(1.0, est.total_weight));
  return est;
}

double coverage_sample_mean(const DnfFormula& f, std::uint64_t samples, std::uint64_t seed) {
  const CoverageSampler sampler(f);
  auto trial = sampler.make_trial();
  Rng rng(seed, Stream::dnf_sampling, 0);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) hits += trial(rng) ? 1 : 0;
  return sampler.total_weight() * static_cast<double>(hits) / static_cast<double>(samples);
}

DnfFormula build_cut_failure_formula(std::span<const CutRecord> cuts, const Multigraph& g) {
  return build_k_failure_formula(cuts, g, 1);
}

DnfFormula build_k_failure_formula(std::span<const CutRecord> cuts, const Multigraph& g, unsigned k) {
  if (k == 0) throw InputError("k must be at least 1");
  std::vector<double> q(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) q[e] = g.edge(e).p_fail;
  std::vector<Clause> clauses;
  std::set<std::vector<EdgeId>> seen;
  for (const CutRecord& cut : cuts) {
    const std::size_t size = cut.edge_ids.size();
    if (size < k)
      throw InputError("cut with " + std::to_string(size) + " edges cannot encode " + std::to_string(k) +
                       "-connectivity failure");
    const std::size_t pick = size - k + 1;
    // Lexicographic walk over pick-subsets of the cut's edges.
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    for (;;) {
      std::vector<EdgeId> subset;
      bool possible = true;
      for (std::size_t i : idx) {
        subset.push_back(cut.edge_ids[i]);
        possible = possible && g.edge(cut.edge_ids[i]).p_fail > 0.0;
      }
      std::sort(subset.begin(), subset.end());
      if (possible && seen.insert(subset).second) {
        Clause clause;
        for (EdgeId e : subset) clause.push_back({e, true});
        clauses.push_back(std::move(clause));
      }
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == size - pick + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return DnfFormula::build(std::move(q), std::move(clauses));
}

}  // namespace relicut
