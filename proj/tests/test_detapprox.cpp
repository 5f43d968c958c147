#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/detapprox.hpp"
#include "relicut/errors.hpp"
#include "relicut/oracle.hpp"
#include "relicut/random.hpp"

using namespace relicut;
using namespace relicut::testing;

TEST_CASE("inclusion-exclusion terms of disjoint events") {
  // Two independent single-variable events: sigma_1 = .5 + .25, sigma_2 = .125.
  const DnfFormula f = DnfFormula::build({0.5, 0.25}, {{{0, true}}, {{1, true}}});
  const auto s = inclusion_exclusion_terms(f, 3);
  CHECK(s[1] == doctest::Approx(0.75));
  CHECK(s[2] == doctest::Approx(0.125));
  CHECK(s[3] == 0.0);
  // Contradictory literals never hold together.
  const DnfFormula g = DnfFormula::build({0.5}, {{{0, true}}, {{0, false}}});
  CHECK(inclusion_exclusion_terms(g, 2)[2] == 0.0);
}

TEST_CASE("truncation lemma on a small system") {
  const DnfFormula f =
      DnfFormula::build({0.3, 0.6, 0.5}, {{{0, true}, {1, true}}, {{1, true}, {2, true}}, {{0, true}, {2, true}}});
  for (unsigned k = 2; k <= 5; ++k) {
    const TruncationCheck c = truncation_error_exact(f, k);
    CHECK(c.error == doctest::Approx(c.lemma_bound).epsilon(1e-12));
    if (k % 2 == 1) CHECK(c.truncated <= c.exact_union + 1e-15);
    if (k % 2 == 0) CHECK(c.truncated >= c.exact_union - 1e-15);
  }
  CHECK(truncation_error_exact(f, 4).error == doctest::Approx(0.0));
  CHECK_THROWS_AS(truncation_error_exact(f, 1), InputError);
}

TEST_CASE("exceedance bound") {
  CHECK(weak_cut_exceedance_bound(10, 2.0, 1.0, 0) == 1.0);
  // u = 2 distinct cuts force a 3-way cut.
  CHECK(weak_cut_exceedance_bound(10, 2.0, 1.0, 2) == doctest::Approx(std::pow(10.0, -3.0)));
  CHECK(weak_cut_exceedance_bound(3, 2.0, 1.0, 4) == 0.0);
  // Non-increasing in u.
  double last = 1.0;
  for (std::uint64_t u = 1; u < 200; ++u) {
    const double b = weak_cut_exceedance_bound(50, 1.0, 1.3, u);
    CHECK(b <= last);
    last = b;
  }
}

TEST_CASE("PAS and heuristic on a bundled cycle") {
  const Multigraph g = make_bundled_cycle(5, 3, 0.2);
  const double exact = exact_fail(g);
  DetApproxOptions o;
  o.alpha_cap = 10.0;
  const DeterministicEstimate pas = pas_fail(g, o);
  CHECK(pas.estimate.method == Method::pas_incl_excl);
  CHECK(std::abs(pas.estimate.value - exact) <= 0.01 * exact);
  CHECK(std::abs(pas.estimate.value - exact) <= *pas.estimate.certified_error_bound);
  CHECK(pas.certificate.k >= 2);
  const DeterministicEstimate h = heuristic_sum_fail(g, o);
  CHECK(h.estimate.method == Method::heuristic_sum);
  CHECK(std::abs(h.estimate.value - exact) <= *h.estimate.certified_error_bound);
}

TEST_CASE("deterministic methods are deterministic") {
  const Multigraph g = make_clique(5, 0.05);
  DetApproxOptions o;
  o.alpha_cap = 10.0;
  const auto a = pas_fail(g, o);
  o.threads = 4;
  const auto b = pas_fail(g, o);
  CHECK(a.estimate.value == b.estimate.value);
  CHECK(a.sigma == b.sigma);
}

TEST_CASE("contraction cut source") {
  const Multigraph g = make_bundled_cycle(12, 3, 0.01);
  DetApproxOptions o;
  o.cuts = CutSource::contraction;
  o.alpha_cap = 10.0;
  const auto r = pas_fail(g, o);
  CHECK(r.estimate.eta == 0.01);
  // Bundles fail independently: FAIL = Pr[at least 2 of 12 bundles fail].
  const double f = 1e-6;
  double exact = 0.0, choose = 1.0;
  for (int j = 1; j <= 12; ++j) {
    choose = choose * (12 - j + 1) / j;
    if (j >= 2) exact += choose * std::pow(f, j) * std::pow(1 - f, 12 - j);
  }
  CHECK(std::abs(r.estimate.value - exact) <= 0.01 * exact);
}

TEST_CASE("refusals") {
  CHECK_THROWS_AS(heuristic_sum_fail(make_cycle(5, 0.1)), RegimeError);
  CHECK_THROWS_AS(pas_fail(make_cycle(5, 0.5)), RegimeError);
  DetApproxOptions o;
  o.alpha_cap = 10.0;
  o.max_terms = 2;
  o.epsilon = 1e-6;
  CHECK_THROWS_AS(pas_fail(make_bundled_cycle(5, 2, 0.2), o), BudgetError);
  const auto trivial = pas_fail(Multigraph::build(1, {}));
  CHECK(trivial.estimate.value == 0.0);
  CHECK(*trivial.estimate.certified_error_bound == 0.0);
}
