#include <cmath>

#include "corpus.hpp"
#include "doctest.h"
#include "relicut/errors.hpp"
#include "relicut/oracle.hpp"
#include "relicut/tutte.hpp"

using namespace relicut;
using namespace relicut::testing;

namespace {

double exact_t_prime(const Multigraph& g, double x, double y) {
  return expectation_from_tail(exact_partition_tail(g, 1.0 / y), (x - 1) * (y - 1));
}

}  // namespace

TEST_CASE("small closed forms") {
  CHECK(exact_tutte(make_cycle(3, .5), 2, 2) == doctest::Approx(8.0));
  CHECK(exact_tutte(make_path(4, .5), 1.7, 3.0) == doctest::Approx(std::pow(1.7, 3)));
  CHECK(exact_tutte(make_cycle(3, .5), 1, 2) == doctest::Approx(4.0));
  CHECK(exact_expectation_identity(make_cycle(3, .5), 1, 2) == doctest::Approx(4.0));
  CHECK(exact_expectation_identity(make_cycle(3, .5), 2, 2) == doctest::Approx(8.0));
  // Two parallel edges: T = x + y.
  CHECK(exact_tutte(make_bundled_cycle(3, 1, .5), 0.5, 2) == doctest::Approx(0.25 + 0.5 + 2));
  CHECK(exact_tutte(Multigraph::build(2, {{0, 1, .5}, {0, 1, .5}}), 3, 5) == doctest::Approx(8.0));
}

TEST_CASE("deletion-contraction equals the expectation identity") {
  for (const auto& [name, g] : corpus())
    for (auto [x, y] : {std::pair{0.5, 1.5}, {1.0, 2.0}, {2.0, 3.0}, {-1.0, 2.5}}) {
      CAPTURE(name);
      const double a = exact_tutte(g, x, y);
      const double b = exact_expectation_identity(g, x, y);
      CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("series form") {
  for (const auto& [name, g] : corpus()) {
    const PartitionTail t = exact_partition_tail(g, 0.4);
    for (double q : {0.0, 0.5, -2.0, 3.0}) CHECK(series_from_tail(t, q) == doctest::Approx(expectation_from_tail(t, q)));
  }
}

TEST_CASE("budget and domain") {
  CHECK_THROWS_AS(exact_tutte(make_cycle(17, .5), 2, 2), BudgetError);
  CHECK_THROWS_AS(exact_expectation_identity(make_cycle(3, .5), 2, 1.0), InputError);
}

TEST_CASE("signed log form") {
  CHECK(SignedLog::from(-2.0).sign == -1);
  CHECK(SignedLog::from(-2.0).value() == doctest::Approx(-2.0));
  CHECK(SignedLog::from(0.0).value() == 0.0);
}

TEST_CASE("leading approximation") {
  CHECK_THROWS_AS(approx_tutte_leading(make_cycle(3, .5), 2, 3), RegimeError);
  const Multigraph g = make_bundled_cycle(4, 4, 0.5);
  for (double x : {1.0, 1.25, 0.75}) {
    const TutteEstimate t = approx_tutte_leading(g, x, 2.0);
    CHECK(t.t_prime == 1.0);
    CHECK(t.delta == doctest::Approx(2.0));
    CHECK(std::abs(exact_t_prime(g, x, 2.0) - 1.0) <= *t.t_prime_error_bound);
    CHECK(t.t.value() == doctest::Approx(std::pow(2.0, 16)));
  }
}

TEST_CASE("delta T estimate") {
  const Multigraph g = make_bundled_cycle(4, 4, 0.5);
  for (double x : {1.0, 1.25, 0.75}) {
    CAPTURE(x);
    const TutteEstimate t = estimate_delta_t(g, x, 2.0, 0.05, 0.01, 3);
    const double exact = 1.0 - exact_t_prime(g, x, 2.0);
    REQUIRE(t.delta_t_prime);
    CHECK(within(*t.delta_t_prime, exact, 0.05));
    CHECK(t.r0 >= 3);
    CHECK(t.delta_t->value() == doctest::Approx(*t.delta_t_prime * std::pow(2.0, 16)));
  }
  // x = 1: only s_2 = FAIL(1/y) survives.
  const TutteEstimate t = estimate_delta_t(g, 1.0, 2.0, 0.05, 0.01, 3);
  CHECK(t.r0 == 3);
  CHECK(*t.delta_t_prime == t.s_hat[2]);
}
