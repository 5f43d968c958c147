#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/cut_enum.hpp"
#include "relicut/errors.hpp"
#include "relicut/oracle.hpp"

using namespace relicut;
using namespace relicut::testing;

namespace {

std::vector<CutRecord> within_alpha(std::vector<CutRecord> cuts) {
  std::erase_if(cuts, [](const CutRecord& c) { return c.beyond_alpha; });
  return cuts;
}

}  // namespace

TEST_CASE("plan") {
  const EnumerationPlan small = make_plan(4, 2, 2.0, 0.01);
  CHECK(small.exhaustive);
  CHECK(small.trials == 1);
  const EnumerationPlan big = make_plan(20, 2, 1.0, 0.01);
  CHECK_FALSE(big.exhaustive);
  CHECK(big.base_size == 2);
  CHECK(big.log_count_bound == doctest::Approx(2.0 * std::log(20.0)));
  CHECK(big.per_trial_success == doctest::Approx(2.0 / (20.0 * 19.0)));
  // Trials cover the union bound.
  CHECK(std::exp(big.log_count_bound) * std::pow(1.0 - big.per_trial_success, double(big.trials)) <= 0.01);
  const EnumerationPlan tighter = make_plan(20, 2, 1.0, 0.0001);
  CHECK(tighter.trials > big.trials);
  const EnumerationPlan three = make_plan(20, 3, 1.0, 0.01);
  CHECK(three.base_size == 4);
}

TEST_CASE("cycles have exactly n choose 2 minimum cuts") {
  for (std::size_t n = 3; n <= 9; ++n) {
    const CutEnumeration en = enumerate_alpha_min_cuts(make_cycle(n, 0.5), nullptr, 1.0);
    CHECK(en.min_value == 2.0);
    CHECK(within_alpha(en.cuts).size() == n * (n - 1) / 2);
  }
}

TEST_CASE("records are canonical with their crossing edges") {
  const Multigraph g = make_cycle(4, 0.5);
  const WeightedView unit = WeightedView::unit(g);
  const std::vector<std::uint32_t> flipped{1, 1, 0, 0};
  const CutRecord rec = make_cut_record(g, unit, flipped);
  CHECK(rec.labels == std::vector<std::uint32_t>{0, 0, 1, 1});
  CHECK(rec.edge_ids == std::vector<EdgeId>{1, 3});
  CHECK(rec.value == 2.0);
  CHECK(rec.side_mask() == 0b1100);
  CHECK(rec.blocks() == 2);
}

TEST_CASE("enumeration matches the exhaustive list") {
  for (const auto& [name, g] : corpus()) {
    for (double alpha : {1.0, 1.5}) {
      CAPTURE(name);
      CAPTURE(alpha);
      EnumerationOptions o;
      o.seed = 3;
      CHECK(within_alpha(enumerate_alpha_min_cuts(g, nullptr, alpha, o).cuts) == exact_cut_list(g, alpha));
    }
  }
}

TEST_CASE("weighted enumeration matches the exhaustive list") {
  const Multigraph g = Multigraph::build(5, {{0, 1, 0.1}, {1, 2, 0.2}, {2, 3, 0.05}, {3, 4, 0.3}, {4, 0, 0.1},
                                             {0, 2, 0.4}, {1, 3, 0.02}});
  const WeightedView w = WeightedView::failure_log(g);
  for (double alpha : {1.0, 1.3, 2.0}) {
    EnumerationOptions o;
    o.slack = 1.0;
    CHECK(enumerate_alpha_min_cuts(g, &w, alpha, o).cuts == exact_cut_list(g, alpha, &w));
  }
}

TEST_CASE("never-failing edges are never cut") {
  const Multigraph g = Multigraph::build(4, {{0, 1, 0.0}, {1, 2, 0.5}, {2, 3, 0.5}, {3, 0, 0.5}});
  const WeightedView w = WeightedView::failure_log(g);
  for (const CutRecord& cut : enumerate_alpha_min_cuts(g, &w, 3.0).cuts)
    CHECK(cut.labels[0] == cut.labels[1]);
}

TEST_CASE("r-way enumeration matches the exhaustive list") {
  for (const auto& [name, g] : corpus()) {
    if (g.vertex_count() < 4) continue;
    CAPTURE(name);
    EnumerationOptions o;
    o.seed = 9;
    const CutEnumeration en = enumerate_alpha_min_rway_cuts(g, nullptr, 3, 1.0, o);
    CHECK(within_alpha(en.cuts) == exact_rway_cut_list(g, 3, 1.0));
    CHECK(en.min_value == min_rway_cut_value(g, WeightedView::unit(g), 3));
  }
}

TEST_CASE("same seed, same cuts") {
  const Multigraph g = make_random_graph(12, 30, 0.5, 4);
  EnumerationOptions o;
  o.seed = 17;
  const auto a = enumerate_alpha_min_cuts(g, nullptr, 1.5, o);
  o.threads = 3;
  const auto b = enumerate_alpha_min_cuts(g, nullptr, 1.5, o);
  CHECK(a.cuts == b.cuts);
  CHECK(a.plan.trials == b.plan.trials);
}

TEST_CASE("single trial only returns genuine cuts") {
  const Multigraph g = make_clique(6, 0.5);
  const WeightedView unit = WeightedView::unit(g);
  const EnumerationPlan plan = make_plan(6, 2, 1.0, 0.01);
  Rng rng(1);
  for (const CutRecord& cut : single_contraction_trial(g, unit, plan, rng)) {
    CHECK(cut.value == static_cast<double>(cut.edge_ids.size()));
    CHECK(cut.value >= 5.0);
  }
}

TEST_CASE("directed cuts of a bidirected cycle") {
  const Digraph g = make_bidirected_cycle(5, 1, 0.5);
  const DirectedCutEnumeration en = enumerate_directed_eulerian_cuts(g, 1.0);
  CHECK(en.min_value == 2.0);
  std::size_t tight = 0;
  for (const auto& cut : en.cuts)
    if (!cut.beyond_alpha) ++tight;
  CHECK(tight == 2 * 10);
  const Digraph lopsided = Digraph::build(3, {{0, 1, .5}, {1, 2, .5}});
  CHECK_THROWS_AS(enumerate_directed_eulerian_cuts(lopsided, 1.0), InputError);
}

TEST_CASE("input checks") {
  CHECK_THROWS_AS(enumerate_alpha_min_cuts(make_cycle(4, .5), nullptr, 0.5), InputError);
  CHECK_THROWS_AS(enumerate_alpha_min_cuts(Multigraph::build(3, {{0, 1, .5}}), nullptr, 1.0), InputError);
}
