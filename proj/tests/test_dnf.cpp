#include <cmath>
#include <numeric>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/dnf.hpp"
#include "relicut/errors.hpp"
#include "relicut/oracle.hpp"
#include "relicut/random.hpp"

using namespace relicut;
using namespace relicut::testing;

TEST_CASE("formula validation") {
  CHECK_THROWS_AS(DnfFormula::build({0.5}, {{}}), InputError);
  CHECK_THROWS_AS(DnfFormula::build({0.5}, {{{1, true}}}), InputError);
  CHECK_THROWS_AS(DnfFormula::build({0.5}, {{{0, true}, {0, false}}}), InputError);
  CHECK_THROWS_AS(DnfFormula::build({1.5}, {{{0, true}}}), InputError);
  const DnfFormula f = DnfFormula::build({0.5, 0.25}, {{{0, true}, {1, false}}});
  CHECK(f.log_clause_weight(0) == doctest::Approx(std::log(0.5 * 0.75)));
}

TEST_CASE("exact union probability") {
  // x0 or x1 with q = .5, .5: 3/4.
  const DnfFormula f = DnfFormula::build({0.5, 0.5}, {{{0, true}}, {{1, true}}});
  CHECK(exact_union_probability(f) == doctest::Approx(0.75));
  // x0 or not x0: 1.
  const DnfFormula g = DnfFormula::build({0.3}, {{{0, true}}, {{0, false}}});
  CHECK(exact_union_probability(g) == doctest::Approx(1.0));
  const auto dist = satisfied_count_distribution(f);
  REQUIRE(dist.size() == 3);
  CHECK(dist[0] == doctest::Approx(0.25));
  CHECK(dist[1] == doctest::Approx(0.5));
  CHECK(dist[2] == doctest::Approx(0.25));
}

TEST_CASE("cut failure formula reproduces FAIL when it lists every cut") {
  for (const auto& [name, g] : corpus(0.2)) {
    CAPTURE(name);
    const auto cuts = exact_cut_list(g, 1e9);
    const DnfFormula f = build_cut_failure_formula(cuts, g);
    CHECK(exact_union_probability(f) == doctest::Approx(exact_fail(g)).epsilon(1e-12));
  }
}

TEST_CASE("k-failure formula reproduces k-connectivity failure") {
  for (const auto& [name, g] : corpus(0.3)) {
    if (min_cut_value(g) < 2) continue;
    CAPTURE(name);
    const auto cuts = exact_cut_list(g, 1e9);
    const DnfFormula f = build_k_failure_formula(cuts, g, 2);
    CHECK(exact_union_probability(f) == doctest::Approx(exact_kconn_fail(g, 2)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_k_failure_formula(exact_cut_list(make_path(3, .5), 1.0), make_path(3, .5), 2), InputError);
}

TEST_CASE("never-failing edges drop their cuts") {
  const Multigraph g = Multigraph::build(3, {{0, 1, 0.0}, {1, 2, 0.5}, {0, 2, 0.5}});
  const auto cuts = exact_cut_list(g, 1e9);
  CHECK(build_cut_failure_formula(cuts, g).clause_count() == 1);
}

TEST_CASE("coverage estimator stays in its bracket and near the truth") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t vars = 3 + rng.below(8);
    std::vector<double> q(vars);
    for (double& x : q) x = 0.05 + 0.9 * rng.uniform();
    std::vector<Clause> clauses;
    const std::size_t count = 1 + rng.below(8);
    for (std::size_t i = 0; i < count; ++i) {
      Clause c;
      for (std::uint32_t v = 0; v < vars; ++v)
        if (rng.bernoulli(0.3)) c.push_back({v, rng.bernoulli(0.7)});
      if (c.empty()) c.push_back({static_cast<std::uint32_t>(rng.below(vars)), true});
      clauses.push_back(std::move(c));
    }
    const DnfFormula f = DnfFormula::build(q, clauses);
    const double exact = exact_union_probability(f);
    const CoverageEstimate e = estimate_union_probability(f, 0.05, 0.01, trial);
    CHECK(e.value >= e.max_weight);
    CHECK(e.value <= std::min(1.0, e.total_weight));
    CHECK(within(e.value, exact, 0.05));
    CHECK(e.samples > 0);
  }
}

TEST_CASE("coverage sample mean is unbiased on a tiny formula") {
  const DnfFormula f = DnfFormula::build({0.5, 0.5}, {{{0, true}}, {{1, true}}});
  CHECK(coverage_sample_mean(f, 200000, 1) == doctest::Approx(0.75).epsilon(0.01));
}

TEST_CASE("estimates are reproducible and thread-independent") {
  const DnfFormula f = build_cut_failure_formula(exact_cut_list(make_clique(5, .2), 2.0), make_clique(5, .2));
  const auto a = estimate_union_probability(f, 0.05, 0.01, 42, 1);
  const auto b = estimate_union_probability(f, 0.05, 0.01, 42, 4);
  CHECK(a.value == b.value);
  CHECK(a.samples == b.samples);
}

TEST_CASE("budget on exact union") {
  std::vector<Clause> clauses;
  for (std::uint32_t v = 0; v < 30; ++v) clauses.push_back({{v, true}});
  const DnfFormula f = DnfFormula::build(std::vector<double>(30, 0.5), clauses);
  CHECK_THROWS_AS(exact_union_probability(f), BudgetError);
  const DnfFormula none = DnfFormula::build({0.0}, {{{0, true}}});
  CHECK_THROWS_AS(estimate_union_probability(none, 0.05, 0.01, 0), InputError);
}
