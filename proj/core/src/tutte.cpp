#include "relicut/tutte.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "relicut/errors.hpp"
#include "relicut/estimators.hpp"

namespace relicut {

namespace {

constexpr unsigned kMaxTutteEdges = 16;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

bool reachable(const EdgeList& edges, VertexId from, VertexId to) {
  std::vector<VertexId> stack{from};
  std::vector<VertexId> seen{from};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (const auto& [a, b] : edges) {
      VertexId w;
      if (a == v)
        w = b;
      else if (b == v)
        w = a;
      else
        continue;
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
        stack.push_back(w);
      }
    }
  }
  return false;
}

double deletion_contraction(EdgeList edges, double x, double y) {
  if (edges.empty()) return 1.0;
  const auto [a, b] = edges.back();
  edges.pop_back();
  if (a == b) return y * deletion_contraction(std::move(edges), x, y);
  EdgeList contracted = edges;
  for (auto& [u, v] : contracted) {
    if (u == b) u = a;
    if (v == b) v = a;
  }
  if (!reachable(edges, a, b)) return x * deletion_contraction(std::move(contracted), x, y);
  return deletion_contraction(std::move(edges), x, y) + deletion_contraction(std::move(contracted), x, y);
}

void check_budget(const Multigraph& g) {
  if (g.edge_count() > kMaxTutteEdges)
    throw BudgetError("Tutte oracle limited to " + std::to_string(kMaxTutteEdges) + " edges, input has " +
                      std::to_string(g.edge_count()));
}

void check_y(double y) {
  if (!(y > 1.0) || !std::isfinite(y)) throw InputError("y must be a finite value above 1, got " + fmt(y));
}

// ln of y^m / (y-1)^{n-1}.
double log_normalization(const Multigraph& g, double y) {
  return static_cast<double>(g.edge_count()) * std::log(y) -
         static_cast<double>(g.vertex_count() - 1) * std::log(y - 1.0);
}

SignedLog scaled(double t_prime, double log_norm) {
  SignedLog s = SignedLog::from(t_prime);
  if (s.sign != 0) s.log_abs += log_norm;
  return s;
}

struct Regime {
  double delta = kInf;
  double ln_n = 0.0;
  double q = 0.0;
  bool trivial = false;
};

// delta from y^{-c} = n^{-(2+delta)}; needs delta > 1 and |Q| < n^{delta/4}/4.
Regime check_regime(const Multigraph& g, double x, double y) {
  check_y(y);
  if (!std::isfinite(x)) throw InputError("x must be finite");
  Regime r;
  r.q = (x - 1.0) * (y - 1.0);
  const std::size_t n = g.vertex_count();
  if (n == 1) {
    r.trivial = true;
    return r;
  }
  const double c = min_cut_value(g);
  r.ln_n = std::log(static_cast<double>(n));
  const double ln_y = std::log(y);
  const double need = std::max(3.0 * r.ln_n, std::log(256.0 * std::pow(r.q, 4) * n * n)) / ln_y;
  r.delta = c * ln_y / r.ln_n - 2.0;
  const bool ok = r.delta > 1.0 && std::abs(r.q) < 0.25 * std::exp(r.delta / 4.0 * r.ln_n);
  if (!ok)
    throw RegimeError("Tutte approximation needs min cut c > " + fmt(need) + " (c > 3 ln n / ln y and c > ln(256 Q^4 n^2) / ln y), got c = " + fmt(c));
  return r;
}

}  // namespace

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog SignedLog::from(double v) {
  if (v == 0.0) return {0.0, 0};
  return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

double exact_tutte(const Multigraph& g, double x, double y) {
  check_budget(g);
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return deletion_contraction(std::move(edges), x, y);
}

double expectation_from_tail(const PartitionTail& tail, double q) {
  double total = 0.0;
  for (std::size_t r = 1; r < tail.p.size(); ++r) total += tail.p[r] * std::pow(q, static_cast<double>(r - 1));
  return total;
}

double series_from_tail(const PartitionTail& tail, double q) {
  double sum = 0.0;
  for (std::size_t r = 2; r < tail.s.size(); ++r) sum += tail.s[r] * std::pow(q, static_cast<double>(r - 2));
  return 1.0 + (q - 1.0) * sum;
}

double exact_expectation_identity(const Multigraph& g, double x, double y) {
  check_y(y);
  check_budget(g);
  const PartitionTail tail = exact_partition_tail(g, 1.0 / y);
  const double t_prime = expectation_from_tail(tail, (x - 1.0) * (y - 1.0));
  return t_prime * std::exp(log_normalization(g, y));
}

TutteEstimate approx_tutte_leading(const Multigraph& g, double x, double y) {
  const Regime r = check_regime(g, x, y);
  TutteEstimate est;
  est.t_prime = 1.0;
  est.delta = r.delta;
  est.t = scaled(1.0, log_normalization(g, y));
  if (r.trivial) {
    est.t_prime_error_bound = 0.0;
    est.regime = "single vertex: T' = 1 exactly";
    return est;
  }
  const double ratio = std::abs(r.q) * std::exp(-r.delta / 2.0 * r.ln_n);
  est.t_prime_error_bound = std::abs(r.q - 1.0) * std::exp(-r.delta * r.ln_n) / (1.0 - ratio);
  est.regime = "delta = " + fmt(r.delta) + " > 1, |Q| n^{-delta/2} = " + fmt(ratio);
  return est;
}

TutteEstimate estimate_delta_t(const Multigraph& g, double x, double y, double epsilon, double eta,
                               std::uint64_t seed, unsigned threads) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (!(eta > 0.0 && eta < 1.0)) throw InputError("eta must lie in (0, 1)");
  const Regime r = check_regime(g, x, y);
  const double log_norm = log_normalization(g, y);
  TutteEstimate est;
  est.delta = r.delta;
  if (r.trivial || r.q == 1.0) {
    est.t_prime = 1.0;
    est.t = scaled(1.0, log_norm);
    est.delta_t_prime = 0.0;
    est.delta_t = SignedLog::from(0.0);
    est.regime = r.trivial ? "single vertex" : "Q = 1: T' = 1 exactly";
    return est;
  }
  const std::size_t n = g.vertex_count();
  const double abs_q = std::abs(r.q);
  const double ratio = abs_q * std::exp(-r.delta / 2.0 * r.ln_n);
  const bool alternating = r.q < 0.0;
  // Relative error allowed on s_2; the same amount, in absolute terms of
  // n^{-(2+delta)}, covers the terms r >= 3 and the dropped tail.
  const double share = alternating ? epsilon / 4.0 : epsilon / 2.0;
  const double log_floor = -(2.0 + r.delta) * r.ln_n;  // s_2 >= y^{-c}
  // Bound on sum_{r >= r0} s_r |Q|^{r-2} from s_r <= n^{-r delta / 2}.
  auto tail_from = [&](unsigned r0) {
    if (r.q == 0.0 || r0 > n) return 0.0;
    return std::exp((r0 - 2.0) * std::log(abs_q) - r0 * r.delta / 2.0 * r.ln_n) / (1.0 - ratio);
  };
  // Half the absolute budget share * n^{-(2+delta)} goes to the dropped tail,
  // half to the estimated terms r >= 3.
  const double budget = 0.5 * share * std::exp(log_floor);
  unsigned r0 = 3;
  while (tail_from(r0) > budget) ++r0;
  est.r0 = r0;
  est.tail_bound = tail_from(r0);

  EstimateOptions o;
  o.epsilon = share;
  o.eta = eta / static_cast<double>(2 * (r0 - 2));
  o.seed = seed;
  o.threads = threads;
  const Multigraph failing = g.with_probability(1.0 / y);
  est.s_hat.assign(r0, 0.0);
  est.s_hat[2] = estimate_fail(failing, o).value;
  if (alternating) {
    const double rest = tail_from(3);
    const double s2_low = est.s_hat[2] / (1.0 + share);
    if (!(rest < 0.25 * s2_low))
      throw RegimeError("x < 1: terms r >= 3 are only bounded by " + fmt(rest) + ", not below s_2 / 4 = " +
                        fmt(0.25 * s2_low) + "; cancellation cannot be ruled out");
  }
  double sum = est.s_hat[2];
  const double term_budget = r0 > 3 ? budget / static_cast<double>(r0 - 3) : 0.0;
  for (unsigned k = 3; k < r0; ++k) {
    // A crude estimate bounds s_k; the term then needs relative precision
    // max(share, term_budget / (upper |Q|^{k-2})) only.
    const double weight = std::pow(abs_q, k - 2.0);
    EstimateOptions crude = o;
    crude.epsilon = 0.5;
    const double rough = estimate_rway_failure(failing, k, crude).value;
    const double upper = 2.0 * rough;
    if (0.5 * upper * weight <= term_budget) {
      est.s_hat[k] = rough;
    } else {
      EstimateOptions fine = o;
      fine.epsilon = std::max(share, term_budget / (upper * weight));
      est.s_hat[k] = estimate_rway_failure(failing, k, fine).value;
    }
    sum += est.s_hat[k] * std::pow(r.q, k - 2.0);
  }
  est.delta_t_prime = (1.0 - r.q) * sum;
  est.t_prime = 1.0 - *est.delta_t_prime;
  est.t = scaled(est.t_prime, log_norm);
  est.delta_t = scaled(*est.delta_t_prime, log_norm);
  est.regime = "delta = " + fmt(r.delta) + ", r0 = " + std::to_string(r0);
  return est;
}

}  // namespace relicut
