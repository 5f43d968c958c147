#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/errors.hpp"
#include "relicut/estimators.hpp"
#include "relicut/oracle.hpp"

using namespace relicut;
using namespace relicut::testing;

TEST_CASE("regime test and tail alpha") {
  CHECK(decide_regime(std::log(0.01), -4 * std::log(5.0)).monte_carlo);
  CHECK_FALSE(decide_regime(6 * std::log(0.3), -4 * std::log(5.0)).monte_carlo);
  CHECK(decide_regime(-1.0, -1.0).monte_carlo);
  // (1 + 2/delta) n^{-alpha delta} <= target at the returned alpha.
  for (double delta : {0.5, 1.0, 3.0})
    for (double target : {1e-3, 1e-8}) {
      const double a = tail_alpha(delta, std::log(10.0), std::log(target));
      CHECK(a >= 1.0);
      if (a > 1.0) CHECK((1 + 2 / delta) * std::pow(10.0, -a * delta) == doctest::Approx(target));
    }
  CHECK(tail_alpha(1.0, std::log(10.0), 0.0) == 1.0);
}

TEST_CASE("trivial inputs are answered exactly") {
  const Estimate one = estimate_fail(Multigraph::build(1, {}));
  CHECK(one.value == 0.0);
  CHECK(one.method == Method::exact_oracle);
  CHECK(estimate_fail(Multigraph::build(3, {{0, 1, .5}})).value == 1.0);
  CHECK(estimate_fail(make_cycle(4, 0.0)).value == 0.0);
  CHECK(estimate_fail(make_cycle(4, 1.0)).value == 1.0);
  CHECK(estimate_kconn_failure(make_path(4, 0.1), 2).value == 1.0);
  CHECK(estimate_orientation_failure(make_path(3, 0.5)).value == 1.0);
  CHECK(estimate_rway_failure(Multigraph::build(3, {}), 3).value == 1.0);
}

TEST_CASE("triangle at p = 0.5") {
  EstimateOptions o;
  o.seed = 7;
  const Estimate e = estimate_fail(make_cycle(3, 0.5), o);
  CHECK(e.method == Method::monte_carlo);
  CHECK(within(e.value, 0.5, 0.05));
  CHECK(e.diagnostics.trials > 0);
  CHECK(e.seed == 7);
}

TEST_CASE("small-failure branch") {
  const Multigraph g = make_bundled_cycle(5, 3, 0.3);
  const Estimate e = estimate_fail(g);
  CHECK(e.method == Method::cut_enum_dnf);
  CHECK(within(e.value, exact_fail(g), 0.05));
  CHECK(e.diagnostics.alpha >= 1.0);
  CHECK(e.diagnostics.cuts >= 10);
  CHECK(estimate_fail_small(g).method == Method::cut_enum_dnf);
  CHECK_THROWS_AS(estimate_fail_small(make_cycle(5, 0.3)), RegimeError);
  EstimateOptions capped;
  capped.alpha_cap = 1.0;
  CHECK_THROWS_AS(estimate_fail(g, capped), RegimeError);
}

TEST_CASE("forced branches") {
  const Multigraph g = make_bundled_cycle(4, 2, 0.2);
  EstimateOptions o;
  o.branch = Branch::monte_carlo;
  CHECK(estimate_fail(g, o).method == Method::monte_carlo);
  CHECK(within(estimate_fail(g, o).value, exact_fail(g), 0.05));
  o.branch = Branch::cut_enum;
  CHECK(estimate_fail(g, o).method == Method::cut_enum_dnf);
  CHECK(within(estimate_fail(g, o).value, exact_fail(g), 0.05));
  CHECK_THROWS_AS(estimate_fail(make_cycle(4, 0.5), o), RegimeError);
}

TEST_CASE("variants against the oracle") {
  const Multigraph g = make_clique(4, 0.3);
  EstimateOptions o;
  o.seed = 1;
  CHECK(within(estimate_kconn_failure(g, 2, o).value, exact_kconn_fail(g, 2), 0.05));
  CHECK(within(estimate_rway_failure(g, 3, o).value, exact_rway_fail(g, 3), 0.05));
  const std::vector<VertexId> t{0, 3};
  CHECK(within(estimate_multiterminal(g, t, o).value, exact_multiterminal_fail(g, t), 0.05));
  CHECK(within(estimate_orientation_failure(g, o).value, exact_orientation_fail(g), 0.05));
  const Digraph d = bidirect(g);
  CHECK(within(estimate_eulerian_strong_failure(d, o).value, exact_strong_fail(d), 0.05));
}

TEST_CASE("small-regime variants") {
  EstimateOptions o;
  o.seed = 2;
  const Multigraph c = make_cycle(5, 0.004);
  const std::vector<VertexId> t{0, 2};
  const Estimate mt = estimate_multiterminal(c, t, o);
  CHECK(mt.method == Method::cut_enum_dnf);
  CHECK(within(mt.value, exact_multiterminal_fail(c, t), 0.05));
  const Multigraph k = make_clique(5, 0.02);
  const Estimate kc = estimate_kconn_failure(k, 2, o);
  CHECK(kc.method == Method::cut_enum_dnf);
  CHECK(within(kc.value, exact_kconn_fail(k, 2), 0.05));
  const Digraph d = bidirect(make_clique(4, 0.05));
  const Estimate eu = estimate_eulerian_strong_failure(d, o);
  CHECK(eu.method == Method::cut_enum_dnf);
  CHECK(within(eu.value, exact_strong_fail(d), 0.05));
}

TEST_CASE("input errors") {
  const Multigraph g = make_cycle(4, 0.3);
  const std::vector<VertexId> bad{0, 9};
  CHECK_THROWS_AS(estimate_multiterminal(g, bad), InputError);
  const std::vector<VertexId> single{1, 1};
  CHECK_THROWS_AS(estimate_multiterminal(g, single), InputError);
  CHECK_THROWS_AS(estimate_rway_failure(g, 1), InputError);
  CHECK_THROWS_AS(estimate_rway_failure(g, 5), InputError);
  CHECK_THROWS_AS(estimate_kconn_failure(g, 0), InputError);
  const Digraph lopsided = Digraph::build(3, {{0, 1, .5}, {1, 2, .5}, {2, 0, .5}, {0, 1, .5}});
  CHECK_THROWS_AS(estimate_eulerian_strong_failure(lopsided), InputError);
  EstimateOptions o;
  o.epsilon = 0.0;
  CHECK_THROWS_AS(estimate_fail(g, o), InputError);
}

TEST_CASE("estimates are reproducible") {
  const Multigraph g = make_random_graph(8, 14, 0.2, 3);
  EstimateOptions o;
  o.seed = 99;
  o.threads = 1;
  const Estimate a = estimate_fail(g, o);
  o.threads = 4;
  const Estimate b = estimate_fail(g, o);
  CHECK(a.value == b.value);
  CHECK(a.diagnostics.trials == b.diagnostics.trials);
}
