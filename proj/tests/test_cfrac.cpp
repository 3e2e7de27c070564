#include <doctest.h>

#include <cmath>

#include "qseries/cfrac.hpp"
#include "qseries/error.hpp"

using namespace qseries;

TEST_CASE("general continued fraction") {
  const auto cf = eval_general_cf(0.3, 0.1, 0.2);
  CHECK(cf.converged);
  CHECK(std::abs(cf.value - general_cf_product(0.3, 0.1, 0.2)) <= 1e-9);
  // q = 0: every tail is the same fraction, whose value is 1; the product side is 1 as well.
  const auto degenerate = eval_general_cf(0.3, 0.1, 0.0);
  CHECK(std::abs(degenerate.value - 1.0) <= 1e-12);
  CHECK(std::abs(general_cf_product(0.3, 0.1, 0.0) - 1.0) <= 1e-12);
  const auto trivial = eval_general_cf(0.0, 0.0, 0.3);
  CHECK(std::abs(trivial.value - 1.0) <= 1e-12);
  CHECK(std::abs(general_cf_product(0.0, 0.0, 0.3) - 1.0) <= 1e-12);
  CHECK_THROWS_AS(eval_general_cf(2.0, 1.0, 0.2), DomainError);
  CHECK_THROWS_AS(eval_general_cf(0.1, 0.1, 1.0), DomainError);
}

TEST_CASE("h continued fraction against the series") {
  for (const double q : {0.05, 0.1, 0.2, 0.3}) {
    const auto cf = eval_h_cf(q);
    CHECK(cf.converged);
    CHECK(cf.residual <= 1e-15);
    CHECK(std::abs(cf.value - h_series_value(q)) <= 1e-9);
  }
  CHECK(std::abs(eval_h_cf(0.1).value - h_series_value(0.1)) <= 1e-10);
  CHECK(std::abs(eval_h_cf(1e-8).value / std::sqrt(1e-8) - 1.0) < 1e-7);
  CHECK_THROWS_AS(eval_h_cf(0.0), DomainError);
}

TEST_CASE("i continued fraction against the series") {
  for (const double q : {0.05, 0.1, 0.2, 0.25, 0.3}) {
    const auto cf = eval_i_cf(q);
    CHECK(cf.converged);
    CHECK(std::abs(cf.value - i_series_value(q)) <= 1e-9);
  }
  CHECK(std::abs(eval_i_cf(0.1).value - i_series_value(0.1)) <= 1e-10);
  CHECK(std::abs(eval_i_cf(1e-9).value - 1.0) < 1e-8);
  CHECK_THROWS_AS(eval_i_cf(1.5), DomainError);
}

TEST_CASE("residual shrinks with depth") {
  for (const double q : {0.05, 0.1, 0.2, 0.3}) {
    double previous = INFINITY;
    for (int depth = 10; depth <= 30; ++depth) {
      const auto cf = eval_h_cf(q, 0.0, depth);
      CHECK(cf.residual <= previous);
      previous = cf.residual;
    }
  }
}

TEST_CASE("non-convergence is reported, not hidden") {
  const auto cf = eval_h_cf(0.3, 0.0, 3);
  CHECK_FALSE(cf.converged);
  CHECK(cf.depth_used == 3);
}

TEST_CASE("vanishing denominators are floored and flagged") {
  // 0 + 1/(0 + 1/(0 + ...)): every Lentz denominator starts at zero.
  const auto cf = evaluate_cf(0.0, [](int) { return 1.0; }, [](int) { return 0.0; }, 1e-12, 20);
  CHECK(cf.floored);
}
