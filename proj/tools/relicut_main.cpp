#include <cmath>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relicut/cut_enum.hpp"
#include "relicut/detapprox.hpp"
#include "relicut/errors.hpp"
#include "relicut/estimators.hpp"
#include "relicut/graph_io.hpp"
#include "relicut/oracle.hpp"
#include "relicut/report.hpp"
#include "relicut/tutte.hpp"

namespace {

using namespace relicut;

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kRefused = 3 };

struct Common {
  std::string file;
  std::optional<double> p;
  double epsilon = 0.05;
  double eta = 0.01;
  std::uint64_t seed = 0;
  double alpha_cap = 3.0;
  std::string method = "auto";
  bool json = false;
  bool no_timing = false;

  EstimateOptions estimate_options() const {
    EstimateOptions o;
    o.epsilon = epsilon;
    o.eta = eta;
    o.seed = seed;
    o.alpha_cap = alpha_cap;
    if (method == "mc")
      o.branch = Branch::monte_carlo;
    else if (method == "cutenum")
      o.branch = Branch::cut_enum;
    return o;
  }

  GraphFile load(std::optional<double> fallback = std::nullopt) const {
    return parse_graph_file(file, p ? p : fallback);
  }
};

void add_file(CLI::App* cmd, Common& c) {
  cmd->add_option("graph", c.file, "graph file (p reliability <n> <m>; e/a lines)")->required();
  cmd->add_option("--p", c.p, "failure probability for lines without one")->check(CLI::Range(0.0, 1.0));
  cmd->add_flag("--json", c.json, "print the report as JSON");
  cmd->add_flag("--no-timing", c.no_timing, "omit wall_ms from the report");
}

void add_estimation(CLI::App* cmd, Common& c, bool with_method = true) {
  add_file(cmd, c);
  cmd->add_option("--epsilon", c.epsilon, "target relative error")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--eta", c.eta, "failure probability of the guarantee")->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--seed", c.seed, "random seed");
  cmd->add_option("--alpha-cap", c.alpha_cap, "largest cut ratio alpha to enumerate");
  if (with_method)
    cmd->add_option("--method", c.method, "auto, mc or cutenum")->check(CLI::IsMember({"auto", "mc", "cutenum"}));
}

void emit(const Report& r, const Common& c) {
  if (c.json)
    std::cout << r.json() << '\n';
  else
    std::cout << r.text();
}

Report estimate_out(const Estimate& e, const Common& c) { return estimate_report(e, !c.no_timing); }

std::vector<VertexId> parse_terminals(const std::string& spec, std::size_t n) {
  std::vector<VertexId> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad terminal '" + item + "'");
    }
    if (used != item.size()) throw InputError("bad terminal '" + item + "'");
    if (v < 1 || v > n) throw InputError("terminal " + item + " outside [1, " + std::to_string(n) + "]");
    out.push_back(static_cast<VertexId>(v - 1));
  }
  return out;
}

std::string describe_blocks(std::span<const std::uint32_t> labels) {
  std::uint32_t blocks = 0;
  for (auto l : labels) blocks = std::max(blocks, l + 1);
  std::string out;
  for (std::uint32_t b = 0; b < blocks; ++b) {
    if (b) out += " | ";
    bool first = true;
    for (std::size_t v = 0; v < labels.size(); ++v)
      if (labels[v] == b) {
        if (!first) out += ' ';
        out += std::to_string(v + 1);
        first = false;
      }
  }
  return out;
}

Report cut_entry(const CutRecord& cut) {
  Report r;
  r.add("partition", describe_blocks(cut.labels));
  r.add("value", cut.value);
  std::string edges;
  for (EdgeId e : cut.edge_ids) edges += (edges.empty() ? "" : " ") + std::to_string(e + 1);
  r.add("edges", edges);
  r.add("beyond_alpha", cut.beyond_alpha);
  return r;
}

Report tutte_out(const TutteEstimate& t, double x, double y) {
  Report r;
  r.add("x", x);
  r.add("y", y);
  r.add("q", (x - 1.0) * (y - 1.0));
  r.add("t_prime", t.t_prime);
  r.add("t_sign", t.t.sign);
  r.add("t_log_abs", t.t.sign == 0 ? std::nan("") : t.t.log_abs);
  r.add("t", t.t.value());
  r.add("t_prime_error_bound", t.t_prime_error_bound ? *t.t_prime_error_bound : std::nan(""));
  r.add("delta_t_prime", t.delta_t_prime ? *t.delta_t_prime : std::nan(""));
  if (t.delta_t) {
    r.add("delta_t_sign", t.delta_t->sign);
    r.add("delta_t_log_abs", t.delta_t->sign == 0 ? std::nan("") : t.delta_t->log_abs);
  }
  r.add("delta", t.delta);
  r.add("r0", t.r0);
  Report::List s;
  for (std::size_t k = 2; k < t.s_hat.size(); ++k) {
    Report e;
    e.add("r", k);
    e.add("s_r", t.s_hat[k]);
    s.push_back(std::move(e));
  }
  if (!s.empty()) r.add("s_hat", std::move(s));
  r.add("regime", t.regime);
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"relicut: network reliability estimation"};
  app.require_subcommand(1);
  Common c;

  auto* rel = app.add_subcommand("rel", "all-terminal failure probability FAIL(p)");
  add_estimation(rel, c);

  unsigned k = 2;
  auto* kconn = app.add_subcommand("kconn", "probability the survivors are not k-edge-connected");
  add_estimation(kconn, c);
  kconn->add_option("--k", k, "connectivity requirement")->required()->check(CLI::PositiveNumber);

  std::string terminals;
  auto* multiterm = app.add_subcommand("multiterm", "probability the terminals disconnect");
  add_estimation(multiterm, c);
  multiterm->add_option("--terminals", terminals, "comma-separated 1-indexed vertices")->required();

  unsigned r = 3;
  auto* rway = app.add_subcommand("rway", "probability of r or more components");
  add_estimation(rway, c);
  rway->add_option("--r", r, "number of components")->required();

  auto* eulerian = app.add_subcommand("eulerian", "Eulerian digraph strong-connectivity failure");
  add_estimation(eulerian, c);

  auto* orient = app.add_subcommand("orient", "random orientation not strongly connected");
  add_estimation(orient, c);

  double x = 1.0, y = 2.0;
  std::string tutte_mode = "leading";
  auto* tutte = app.add_subcommand("tutte", "Tutte polynomial T(G; x, y)");
  add_estimation(tutte, c, false);
  tutte->add_option("--x", x, "x coordinate")->required();
  tutte->add_option("--y", y, "y coordinate (> 1)")->required();
  tutte->add_option("--mode", tutte_mode, "leading, delta or exact")
      ->check(CLI::IsMember({"leading", "delta", "exact"}));

  double alpha = 1.0;
  unsigned cut_blocks = 2;
  std::string weights = "unit";
  bool exhaustive = false;
  auto* cuts = app.add_subcommand("cuts", "list alpha-minimum cuts");
  add_file(cuts, c);
  cuts->add_option("--alpha", alpha, "cut ratio alpha >= 1")->check(CLI::Range(1.0, 1e9));
  cuts->add_option("--r", cut_blocks, "number of blocks");
  cuts->add_option("--weights", weights, "unit or log (ln 1/p)")->check(CLI::IsMember({"unit", "log"}));
  cuts->add_option("--eta", c.eta, "probability of missing a cut")->check(CLI::Range(0.0, 1.0));
  cuts->add_option("--seed", c.seed, "random seed");
  cuts->add_flag("--exhaustive", exhaustive, "scan every partition instead of contracting");

  std::string cut_source = "auto";
  unsigned max_terms = 16;
  auto add_det = [&](CLI::App* cmd) {
    add_estimation(cmd, c, false);
    cmd->add_option("--cut-source", cut_source, "auto, exhaustive or contraction")
        ->check(CLI::IsMember({"auto", "exhaustive", "contraction"}));
  };
  auto* heuristic = app.add_subcommand("heuristic", "sum of weak-cut failure probabilities");
  add_det(heuristic);
  auto* pas = app.add_subcommand("pas", "truncated inclusion-exclusion");
  add_det(pas);
  pas->add_option("--max-terms", max_terms, "largest truncation point");

  std::string problem;
  auto* exact = app.add_subcommand("exact", "brute-force oracle");
  exact->add_option("problem", problem, "rel, kconn, multiterm, rway, eulerian, orient or tutte")
      ->required()
      ->check(CLI::IsMember({"rel", "kconn", "multiterm", "rway", "eulerian", "orient", "tutte"}));
  add_file(exact, c);
  exact->add_option("--k", k, "connectivity requirement");
  exact->add_option("--terminals", terminals, "comma-separated 1-indexed vertices");
  exact->add_option("--r", r, "number of components");
  exact->add_option("--x", x, "x coordinate");
  exact->add_option("--y", y, "y coordinate");

  std::string kind;
  std::size_t gen_n = 0, gen_m = 0, bundle = 1;
  double gen_p = 0.5;
  auto* gen = app.add_subcommand("gen", "print a generated graph file");
  gen->add_option("kind", kind, "path, cycle, clique, bundled, random or bicycle")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "clique", "bundled", "random", "bicycle"}));
  gen->add_option("--n", gen_n, "vertices")->required();
  gen->add_option("--m", gen_m, "edges (random)");
  gen->add_option("--bundle", bundle, "parallel copies per edge (bundled, bicycle)");
  gen->add_option("--p", gen_p, "failure probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", c.seed, "random seed (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  const EstimateOptions o = c.estimate_options();
  if (rel->parsed()) {
    emit(estimate_out(estimate_fail(c.load().graph(), o), c), c);
  } else if (kconn->parsed()) {
    emit(estimate_out(estimate_kconn_failure(c.load().graph(), k, o), c).add("k", k), c);
  } else if (multiterm->parsed()) {
    const Multigraph g = c.load().graph();
    emit(estimate_out(estimate_multiterminal(g, parse_terminals(terminals, g.vertex_count()), o), c)
             .add("terminals", terminals),
         c);
  } else if (rway->parsed()) {
    emit(estimate_out(estimate_rway_failure(c.load().graph(), r, o), c).add("r", r), c);
  } else if (eulerian->parsed()) {
    emit(estimate_out(estimate_eulerian_strong_failure(c.load().digraph(), o), c), c);
  } else if (orient->parsed()) {
    emit(estimate_out(estimate_orientation_failure(c.load(0.5).graph(), o), c), c);
  } else if (tutte->parsed()) {
    const Multigraph g = c.load(0.5).graph();
    if (tutte_mode == "exact") {
      TutteEstimate t;
      const double value = exact_tutte(g, x, y);
      t.t = SignedLog::from(value);
      t.t_prime = std::nan("");
      t.regime = "exact deletion-contraction";
      emit(tutte_out(t, x, y), c);
    } else if (tutte_mode == "leading") {
      emit(tutte_out(approx_tutte_leading(g, x, y), x, y), c);
    } else {
      emit(tutte_out(estimate_delta_t(g, x, y, c.epsilon, c.eta, c.seed), x, y).add("seed", c.seed), c);
    }
  } else if (cuts->parsed()) {
    const Multigraph g = c.load(0.5).graph();
    const WeightedView w = weights == "log" ? WeightedView::failure_log(g) : WeightedView::unit(g);
    Report rep;
    std::vector<CutRecord> list;
    if (exhaustive) {
      list = cut_blocks == 2 ? exact_cut_list(g, alpha, &w) : exact_rway_cut_list(g, cut_blocks, alpha, &w);
      rep.add("method", "exhaustive");
    } else {
      EnumerationOptions eo;
      eo.eta = c.eta;
      eo.seed = c.seed;
      CutEnumeration en = cut_blocks == 2 ? enumerate_alpha_min_cuts(g, &w, alpha, eo)
                                          : enumerate_alpha_min_rway_cuts(g, &w, cut_blocks, alpha, eo);
      list = std::move(en.cuts);
      rep.add("method", "contraction");
      rep.add("trials", en.plan.trials);
      rep.add("eta", c.eta);
      rep.add("seed", c.seed);
    }
    rep.add("n", g.vertex_count());
    rep.add("m", g.edge_count());
    rep.add("r", cut_blocks);
    rep.add("alpha", alpha);
    rep.add("weights", weights);
    rep.add("count", list.size());
    Report::List entries;
    for (const CutRecord& cut : list) entries.push_back(cut_entry(cut));
    rep.add("cuts", std::move(entries));
    emit(rep, c);
  } else if (heuristic->parsed() || pas->parsed()) {
    DetApproxOptions d;
    d.epsilon = c.epsilon;
    d.eta = c.eta;
    d.seed = c.seed;
    d.alpha_cap = c.alpha_cap;
    d.max_terms = max_terms;
    d.cuts = cut_source == "exhaustive"   ? CutSource::exhaustive
             : cut_source == "contraction" ? CutSource::contraction
                                           : CutSource::automatic;
    const Multigraph g = c.load().graph();
    const DeterministicEstimate det = heuristic->parsed() ? heuristic_sum_fail(g, d) : pas_fail(g, d);
    Report rep = estimate_out(det.estimate, c);
    rep.add("truncation_k", det.certificate.k);
    rep.add("truncation_bound", det.certificate.bound);
    rep.add("truncation_source", det.certificate.formula_source);
    rep.add("tail_bound", det.tail_bound);
    emit(rep, c);
  } else if (exact->parsed()) {
    Report rep;
    rep.add("problem", problem);
    double value = 0.0;
    if (problem == "eulerian") {
      const Digraph g = c.load().digraph();
      require_eulerian(g);
      value = exact_strong_fail(g);
      rep.add("n", g.vertex_count()).add("m", g.arc_count());
    } else {
      const bool needs_p = problem != "orient" && problem != "tutte";
      const Multigraph g = (needs_p ? c.load() : c.load(0.5)).graph();
      rep.add("n", g.vertex_count()).add("m", g.edge_count());
      if (problem == "rel") value = exact_fail(g);
      if (problem == "kconn") value = exact_kconn_fail(g, k);
      if (problem == "multiterm") value = exact_multiterminal_fail(g, parse_terminals(terminals, g.vertex_count()));
      if (problem == "rway") value = exact_rway_fail(g, r);
      if (problem == "orient") value = exact_orientation_fail(g);
      if (problem == "tutte") value = exact_tutte(g, x, y);
    }
    rep.add("value", value);
    rep.add("method", "exact_oracle");
    emit(rep, c);
  } else if (gen->parsed()) {
    if (kind == "path") std::cout << format_graph(make_path(gen_n, gen_p));
    if (kind == "cycle") std::cout << format_graph(make_cycle(gen_n, gen_p));
    if (kind == "clique") std::cout << format_graph(make_clique(gen_n, gen_p));
    if (kind == "bundled") std::cout << format_graph(make_bundled_cycle(gen_n, bundle, gen_p));
    if (kind == "random") std::cout << format_graph(make_random_graph(gen_n, gen_m, gen_p, c.seed));
    if (kind == "bicycle") std::cout << format_digraph(make_bidirected_cycle(gen_n, bundle, gen_p));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const relicut::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const relicut::RegimeError& e) {
    std::cerr << "regime refused: " << e.what() << '\n';
    return kRefused;
  } catch (const relicut::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
}
