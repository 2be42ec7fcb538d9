#include <doctest.h>

#include <cmath>

#include "parcomp/error.hpp"
#include "parcomp/normal.hpp"
#include "support.hpp"

using parcomp::normal_cdf;
using parcomp::normal_pdf;
using parcomp::normal_quantile;

TEST_CASE("normal cdf agrees with independent quadrature to 1e-12") {
  for (double x = -8.0; x <= 8.0 + 1e-9; x += 0.25) {
    CHECK(std::abs(normal_cdf(x) - testsupport::quad_normal_cdf(x)) <= 1e-12);
  }
}

TEST_CASE("normal cdf symmetry and endpoints") {
  CHECK(normal_cdf(0.0) == 0.5);
  for (double x = 0.25; x <= 6.0; x += 0.25) {
    CHECK(std::abs(normal_cdf(x) + normal_cdf(-x) - 1.0) <= 1e-15);
  }
  CHECK(normal_cdf(40.0) == 1.0);
  CHECK(normal_cdf(-40.0) == 0.0);
}

TEST_CASE("normal quantile inverts the cdf") {
  for (double x = -6.0; x <= 6.0 + 1e-9; x += 0.125) {
    // In the upper tail p = cdf(x) sits on the 2^-53 grid next to 1, so no
    // inverse can recover x more precisely than about one ulp of p divided
    // by the density (2e-8 at x = 6); budget a few ulps for the cdf itself.
    const double ulp_floor = 1.11e-16 / normal_pdf(x);
    CHECK(std::abs(normal_quantile(normal_cdf(x)) - x) <=
          1e-12 + 8.0 * ulp_floor);
  }
  for (double p = 0.01; p < 1.0; p += 0.01) {
    CHECK(std::abs(normal_cdf(normal_quantile(p)) - p) <= 1e-13);
  }
}

TEST_CASE("normal quantile agrees with independent bisection") {
  for (double p = 0.001; p < 1.0; p += 0.013) {
    CHECK(std::abs(normal_quantile(p) - testsupport::bisect_normal_quantile(p)) <=
          1e-10);
  }
}

TEST_CASE("normal quantile median and tails") {
  CHECK(normal_quantile(0.5) == 0.0);
  CHECK(std::abs(normal_quantile(1e-300)) > 30.0);
  CHECK(normal_quantile(1e-12) < 0.0);
  CHECK(normal_quantile(1.0 - 1e-12) > 0.0);
}

TEST_CASE("normal quantile rejects p outside (0,1)") {
  CHECK_THROWS_AS(normal_quantile(0.0), parcomp::InvalidArgumentError);
  CHECK_THROWS_AS(normal_quantile(1.0), parcomp::InvalidArgumentError);
  CHECK_THROWS_AS(normal_quantile(-0.5), parcomp::InvalidArgumentError);
  CHECK_THROWS_AS(normal_quantile(1.5), parcomp::InvalidArgumentError);
}
