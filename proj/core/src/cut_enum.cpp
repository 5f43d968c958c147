#include "relicut/cut_enum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "relicut/errors.hpp"
#include "relicut/parallel.hpp"
#include "relicut/partitions.hpp"

namespace relicut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kTrialsPerChunk = 256;

struct LabelHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint32_t x : v) h = splitmix64(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

using RecordMap = std::unordered_map<std::vector<std::uint32_t>, CutRecord, LabelHash>;

// Graph with never-failing edges pre-merged. Contraction trials start from
// the classes of `initial` and only pick finite-weight edges between them.
class Contractor {
 public:
  Contractor(const Multigraph& g, const WeightedView& w) : g_(&g), w_(&w), initial_(g.vertex_count()) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (w.never_fails(e)) initial_.unite(g.edge(e).u, g.edge(e).v);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (!w.never_fails(e) && !initial_.same(g.edge(e).u, g.edge(e).v)) candidates_.push_back(e);
    uniform_ = std::all_of(candidates_.begin(), candidates_.end(), [&](EdgeId e) {
      return w.weight(e) > 0.0 && w.weight(e) == w.weight(candidates_.front());
    });
  }

  std::size_t class_count() const { return initial_.set_count(); }

  // Random contraction down to `base` classes (or until edges run out).
  // Writes the class of every vertex, numbered by first appearance.
  std::uint32_t contract(std::size_t base, Rng* rng, std::vector<std::uint32_t>& cls) {
    DisjointSets sets = initial_;
    if (rng && sets.set_count() > base) {
      order_ = candidates_;
      if (uniform_) {
        for (std::size_t i = 0; i < order_.size() && sets.set_count() > base; ++i) {
          std::swap(order_[i], order_[i + rng->below(order_.size() - i)]);
          const Edge& e = g_->edge(order_[i]);
          sets.unite(e.u, e.v);
        }
      } else {
        // Exponential race: the first clock among edges still joining two
        // classes rings with probability proportional to its weight.
        keyed_.clear();
        for (EdgeId e : candidates_) {
          const double w = w_->weight(e);
          const double key = w > 0.0 ? -std::log(rng->uniform_open_zero()) / w : kInf;
          keyed_.push_back({key, (*rng)(), e});
        }
        std::sort(keyed_.begin(), keyed_.end());
        for (const Keyed& k : keyed_) {
          if (sets.set_count() <= base) break;
          const Edge& e = g_->edge(k.edge);
          sets.unite(e.u, e.v);
        }
      }
    }
    const std::size_t n = g_->vertex_count();
    cls.assign(n, 0);
    remap_.assign(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (VertexId v = 0; v < n; ++v) {
      const std::uint32_t root = sets.find(v);
      if (remap_[root] == UINT32_MAX) remap_[root] = next++;
      cls[v] = remap_[root];
    }
    return next;
  }

 private:
  struct Keyed {
    double key;
    std::uint64_t tie;
    EdgeId edge;
    bool operator<(const Keyed& o) const { return key != o.key ? key < o.key : tie < o.tie; }
  };

  const Multigraph* g_;
  const WeightedView* w_;
  DisjointSets initial_;
  std::vector<EdgeId> candidates_;
  bool uniform_ = true;
  std::vector<EdgeId> order_;
  std::vector<Keyed> keyed_;
  std::vector<std::uint32_t> remap_;
};

// Calls fn(labels, value) for every `blocks`-way partition of the k classes.
// Values come from a k x k class weight matrix.
template <class Fn>
void for_each_base_cut(const Multigraph& g, const WeightedView& w, std::span<const std::uint32_t> cls,
                       std::uint32_t k, std::uint32_t blocks, Fn&& fn) {
  std::vector<double> matrix(std::size_t{k} * k, 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::uint32_t a = cls[g.edge(e).u], b = cls[g.edge(e).v];
    if (a != b) matrix[std::size_t{std::min(a, b)} * k + std::max(a, b)] += w.weight(e);
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<double> pair_w;
  for (std::uint32_t a = 0; a < k; ++a)
    for (std::uint32_t b = a + 1; b < k; ++b)
      if (matrix[std::size_t{a} * k + b] != 0.0) {
        pairs.push_back({a, b});
        pair_w.push_back(matrix[std::size_t{a} * k + b]);
      }
  std::vector<std::uint32_t> labels(cls.size());
  for_each_set_partition(k, blocks, [&](std::span<const std::uint32_t> part) {
    double value = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (part[pairs[i].first] != part[pairs[i].second]) value += pair_w[i];
    for (std::size_t v = 0; v < cls.size(); ++v) labels[v] = part[cls[v]];
    fn(std::span<const std::uint32_t>(labels), value);
  });
}

std::vector<CutRecord> sorted_records(RecordMap& map) {
  std::vector<CutRecord> out;
  out.reserve(map.size());
  for (auto& [key, rec] : map) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [](const CutRecord& a, const CutRecord& b) {
    return a.value != b.value ? a.value < b.value : a.labels < b.labels;
  });
  return out;
}

double ceil_tolerant(double x) { return std::ceil(x - 1e-9); }

// Shared driver for 2-way and r-way enumeration.
CutEnumeration enumerate_impl(const Multigraph& g, const WeightedView& w, std::uint32_t r, double alpha,
                              double min_value, const EnumerationOptions& options) {
  Contractor base_contractor(g, w);
  CutEnumeration result;
  result.min_value = min_value;
  result.plan = make_plan(base_contractor.class_count(), r, alpha, options.eta);
  if (base_contractor.class_count() < r || min_value == kInf) return result;

  const double limit_alpha = alpha * min_value * (1.0 + kCutTieTolerance);
  const double limit = limit_alpha * options.slack;
  const EnumerationPlan& plan = result.plan;

  auto collect = [&](Contractor& contractor, Rng* rng, std::uint64_t trials, RecordMap& seen) {
    std::vector<std::uint32_t> cls;
    for (std::uint64_t t = 0; t < trials; ++t) {
      const std::uint32_t k = contractor.contract(plan.base_size, rng, cls);
      for_each_base_cut(g, w, cls, k, r, [&](std::span<const std::uint32_t> labels, double value) {
        if (value > limit * (1.0 + kCutTieTolerance)) return;
        std::vector<std::uint32_t> key(labels.begin(), labels.end());
        if (seen.contains(key)) return;
        CutRecord rec = make_cut_record(g, w, labels);
        if (rec.value > limit) return;
        rec.beyond_alpha = rec.value > limit_alpha;
        seen.emplace(std::move(key), std::move(rec));
      });
    }
  };

  RecordMap merged;
  if (plan.exhaustive) {
    collect(base_contractor, nullptr, 1, merged);
  } else {
    const std::uint64_t chunks = (plan.trials + kTrialsPerChunk - 1) / kTrialsPerChunk;
    std::vector<RecordMap> partial(chunks);
    parallel_for(chunks, options.threads, [&](std::size_t c) {
      Contractor contractor(g, w);
      Rng rng(options.seed, Stream::cut_enumeration, c);
      const std::uint64_t begin = c * kTrialsPerChunk;
      collect(contractor, &rng, std::min(kTrialsPerChunk, plan.trials - begin), partial[c]);
    });
    for (RecordMap& part : partial) merged.merge(part);
  }
  result.cuts = sorted_records(merged);
  return result;
}

}  // namespace

std::uint32_t CutRecord::blocks() const {
  std::uint32_t b = 0;
  for (std::uint32_t l : labels) b = std::max(b, l + 1);
  return b;
}

std::uint64_t CutRecord::side_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < labels.size() && v < 64; ++v)
    if (labels[v] != 0) mask |= std::uint64_t{1} << v;
  return mask;
}

EnumerationPlan make_plan(std::size_t vertices, std::uint32_t blocks, double alpha, double eta) {
  EnumerationPlan plan;
  plan.alpha = alpha;
  plan.blocks = blocks;
  plan.eta = eta;
  const double spread = 2.0 * alpha * (blocks - 1);
  plan.base_size = std::max<std::uint32_t>(blocks, static_cast<std::uint32_t>(ceil_tolerant(spread)));
  const double n = static_cast<double>(std::max<std::size_t>(vertices, 1));
  plan.log_count_bound = blocks == 2 ? spread * std::log(n) : spread * std::log(blocks * n);
  if (plan.base_size >= vertices) {
    plan.exhaustive = true;
    plan.trials = 1;
    plan.per_trial_success = 1.0;
    return plan;
  }
  double log_success = 0.0;
  for (std::size_t j = plan.base_size + 1; j <= vertices; ++j) log_success += std::log1p(-spread / j);
  plan.per_trial_success = std::exp(log_success);
  const double needed = (std::max(plan.log_count_bound, 0.0) - std::log(eta)) / plan.per_trial_success;
  plan.trials = static_cast<std::uint64_t>(std::max(1.0, std::ceil(needed)));
  return plan;
}

CutRecord make_cut_record(const Multigraph& g, const WeightedView& weights, std::span<const std::uint32_t> labels) {
  CutRecord rec;
  rec.labels = canonical_labels(labels);
  rec.edge_ids = crossing_edges(g, rec.labels);
  for (EdgeId e : rec.edge_ids) rec.value += weights.weight(e);
  return rec;
}

CutEnumeration enumerate_alpha_min_cuts(const Multigraph& g, const WeightedView* weights, double alpha,
                                        const EnumerationOptions& options) {
  if (!(alpha >= 1.0)) throw InputError("alpha must be at least 1");
  const WeightedView unit = WeightedView::unit(g);
  const WeightedView& w = weights ? *weights : unit;
  const MinCutResult mc = min_cut(g, &w);
  if (!mc.connected) throw InputError("cut enumeration needs a connected graph");
  return enumerate_impl(g, w, 2, alpha, mc.value, options);
}

CutEnumeration enumerate_alpha_min_rway_cuts(const Multigraph& g, const WeightedView* weights, std::uint32_t r,
                                             double alpha, const EnumerationOptions& options) {
  if (r < 2) throw InputError("r must be at least 2");
  if (r > g.vertex_count())
    throw InputError("r = " + std::to_string(r) + " exceeds vertex count " + std::to_string(g.vertex_count()));
  if (r == 2) return enumerate_alpha_min_cuts(g, weights, alpha, options);
  if (!(alpha >= 1.0)) throw InputError("alpha must be at least 1");
  const WeightedView unit = WeightedView::unit(g);
  const WeightedView& w = weights ? *weights : unit;
  if (!min_cut(g, &w).connected) throw InputError("cut enumeration needs a connected graph");
  return enumerate_impl(g, w, r, alpha, min_rway_cut_value(g, w, r, options), options);
}

std::vector<CutRecord> single_contraction_trial(const Multigraph& g, const WeightedView& weights,
                                                const EnumerationPlan& plan, Rng& rng) {
  Contractor contractor(g, weights);
  std::vector<std::uint32_t> cls;
  const std::uint32_t k = contractor.contract(plan.base_size, &rng, cls);
  std::vector<CutRecord> out;
  for_each_base_cut(g, weights, cls, k, plan.blocks, [&](std::span<const std::uint32_t> labels, double) {
    out.push_back(make_cut_record(g, weights, labels));
  });
  return out;
}

double min_rway_cut_value(const Multigraph& g, const WeightedView& weights, std::uint32_t r,
                          const EnumerationOptions& options) {
  if (r == 2) return min_cut(g, &weights).value;
  Contractor contractor(g, weights);
  const std::size_t classes = contractor.class_count();
  if (classes < r) return kInf;
  double best = kInf;
  auto scan = [&](std::span<const std::uint32_t> cls, std::uint32_t k) {
    for_each_base_cut(g, weights, cls, k, r,
                      [&](std::span<const std::uint32_t>, double value) { best = std::min(best, value); });
  };
  std::vector<std::uint32_t> cls;
  if (classes <= 12) {
    const std::uint32_t k = contractor.contract(classes, nullptr, cls);
    scan(cls, k);
    return best;
  }
  // Every minimum r-way cut survives a trial with probability at least
  // per_trial_success, so this many trials find one w.p. >= 1 - eta.
  const EnumerationPlan plan = make_plan(classes, r, 1.0, options.eta);
  Rng rng(options.seed, Stream::cut_enumeration, UINT64_MAX);
  for (std::uint64_t t = 0; t < plan.trials; ++t) {
    const std::uint32_t k = contractor.contract(plan.base_size, &rng, cls);
    scan(cls, k);
  }
  return best;
}

DirectedCutEnumeration enumerate_directed_eulerian_cuts(const Digraph& g, double alpha,
                                                        const EnumerationOptions& options) {
  require_eulerian(g);
  const std::vector<std::uint8_t> all(g.arc_count(), 1);
  if (!is_strongly_connected(g, all)) throw InputError("digraph is not strongly connected");
  const Multigraph h = g.underlying();
  const CutEnumeration undirected = enumerate_alpha_min_cuts(h, nullptr, alpha, options);
  DirectedCutEnumeration result;
  result.min_value = undirected.min_value / 2.0;
  result.plan = undirected.plan;
  for (const CutRecord& cut : undirected.cuts) {
    for (bool forward : {true, false}) {
      DirectedCutRecord rec;
      rec.labels = cut.labels;
      rec.forward = forward;
      rec.beyond_alpha = cut.beyond_alpha;
      for (EdgeId a : cut.edge_ids) {
        const bool leaves_zero = cut.labels[g.arc(a).tail] == 0;
        if (leaves_zero == forward) rec.arc_ids.push_back(a);
      }
      rec.value = static_cast<double>(rec.arc_ids.size());
      result.cuts.push_back(std::move(rec));
    }
  }
  return result;
}

}  // namespace relicut
