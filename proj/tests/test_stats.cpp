#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "reliacut/stats.hpp"

using namespace reliacut;

TEST_CASE("normal quantile") {
  CHECK(normal_quantile(0.975) ==
        doctest::Approx(1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
  CHECK(normal_quantile(0.025) ==
        doctest::Approx(-1.959963984540054).epsilon(1e-12));
  CHECK(normal_quantile(0.001) ==
        doctest::Approx(-3.090232306167814).epsilon(1e-9));
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
}

TEST_CASE("mean and sample variance") {
  CHECK(mean({1.0, 2.0, 3.0}) == doctest::Approx(2.0));
  CHECK(sample_variance({1.0, 2.0, 3.0}) == doctest::Approx(1.0));
  CHECK(sample_variance({5.0, 5.0}) == 0.0);
  CHECK_THROWS_AS(sample_variance({1.0}), std::domain_error);
}

TEST_CASE("welch p-value") {
  // Reference value computed with an independent statistics package.
  double p = welch_p_value({1.1, 2.0, 2.9, 1.8}, {5.0, 6.1, 4.9, 5.9});
  CHECK(p == doctest::Approx(0.00038718291758256496).epsilon(1e-9));
  CHECK(p < 0.001);

  double p2 = welch_p_value({0.1, 0.2, 0.3}, {0.15, 0.25, 0.4});
  CHECK(p2 == doctest::Approx(0.5141226783968211).epsilon(1e-9));
}

TEST_CASE("welch degenerate and symmetry rules") {
  CHECK(welch_p_value({1, 2, 3}, {1, 2, 3}) == 1.0);
  CHECK(welch_p_value({0, 0, 0, 0}, {1, 1, 1, 1}) == 0.0);
  CHECK(welch_p_value({2, 2}, {2, 2}) == 1.0);
  CHECK_THROWS_AS((welch_p_value({1.0}, {1.0, 2.0})), std::domain_error);

  double ab = welch_p_value({1.1, 2.0, 2.9, 1.8}, {5.0, 6.1, 4.9, 5.9});
  double ba = welch_p_value({5.0, 6.1, 4.9, 5.9}, {1.1, 2.0, 2.9, 1.8});
  CHECK(std::fabs(ab - ba) < 1e-12);
}
