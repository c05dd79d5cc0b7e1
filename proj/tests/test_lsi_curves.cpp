#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <numbers>

#include "hcube/cube_function.hpp"
#include "hcube/lsi.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"
#include "test_util.hpp"

using namespace hcube;
using namespace hcube_test;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_SUITE_BEGIN("lsi-curves");

TEST_CASE("binary entropy and its inverse") {
  CHECK(binary_entropy(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == doctest::Approx(0.0));
  CHECK(binary_entropy(1.0) == doctest::Approx(0.0));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.5623351446188083).epsilon(1e-14));
  for (double y : {0.01, 0.1, 0.25, 0.4, 0.499, 0.5})
    CHECK(std::abs(binary_entropy_inv(binary_entropy(y)) - y) < 1e-12);
  for (double z : {0.0, 0.1, 0.4, kLn2})
    CHECK(std::abs(binary_entropy(binary_entropy_inv(z)) - z) < 1e-14);
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy_inv(kLn2 + 0.01), std::domain_error);
}

TEST_CASE("binary convolution") {
  CHECK(binary_conv(0.3, 0.0) == doctest::Approx(0.3));
  CHECK(binary_conv(0.3, 0.5) == doctest::Approx(0.5));
  CHECK(binary_conv(0.2, 0.3) == doctest::Approx(0.38));
  CHECK(binary_conv(0.2, 0.3) == doctest::Approx(binary_conv(0.3, 0.2)));
  CHECK_THROWS_AS(binary_conv(1.2, 0.1), std::domain_error);
}

TEST_CASE("b1 curve") {
  CHECK(b1(0.0) == doctest::Approx(0.0));
  CHECK(b1(kLn2 - binary_entropy(0.25)) ==
        doctest::Approx(0.25 * std::log(3.0)).epsilon(1e-12));
  CHECK(b1(kLn2) == kInf);
  CHECK_THROWS_AS(b1(kLn2 + 1e-6), std::domain_error);
  CHECK_THROWS_AS(b1(-1e-9), std::domain_error);

  // increasing and convex on a uniform grid
  const auto xs = linspace(0.0, kLn2 - 1e-4, 2001);
  std::vector<double> ys;
  for (double x : xs) ys.push_back(b1(x));
  for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] >= ys[i - 1] - 1e-14);
  for (std::size_t i = 1; i + 1 < ys.size(); ++i)
    CHECK(ys[i - 1] + ys[i + 1] - 2 * ys[i] >= -1e-12);

  // slope 2 at the origin (linearized modified LSI)
  CHECK(b1(1e-7) / 1e-7 == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("bp curves") {
  CHECK(bp(2.0, 0.0) == doctest::Approx(0.0));
  const double xq = kLn2 - binary_entropy(0.25);
  CHECK(bp(2.0, xq) == doctest::Approx(0.5 * (1.0 - 2.0 * std::sqrt(0.1875))).epsilon(1e-12));
  CHECK(bp(2.0, kLn2) == doctest::Approx(0.5));
  CHECK_THROWS_AS(bp(0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(bp(1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(bp(0.5, kLn2), std::domain_error);  // diverges for p < 1

  // nonnegative, vanish at 0, increasing, convex
  for (double p : {-1.0, 0.5, 1.5, 2.0, 3.0, 4.0}) {
    const double hi = p > 1 ? kLn2 : kLn2 - 1e-4;
    const auto xs = linspace(0.0, hi, 1001);
    std::vector<double> ys;
    for (double x : xs) ys.push_back(bp(p, x));
    CHECK(std::abs(ys.front()) < 1e-14);
    for (double y : ys) CHECK(y >= -1e-14);
    for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] >= ys[i - 1] - 1e-14);
    for (std::size_t i = 1; i + 1 < ys.size(); ++i)
      CHECK(ys[i - 1] + ys[i + 1] - 2 * ys[i] >= -1e-12);
  }

  // duality bp = b_{p/(p-1)} pointwise
  for (auto [p, q] : {std::pair{-1.0, 0.5}, std::pair{3.0, 1.5}}) {
    for (double x : linspace(0.0, kLn2 - 1e-3, 257))
      CHECK(std::abs(bp(p, x) - bp(q, x)) < 1e-12);
  }
}

TEST_CASE("C curve endpoints and identity") {
  CHECK(cfun(0.0) == 2.0);
  CHECK(cfun(kLn2) == 2.0 / kLn2);
  // C(x) x = 4 b2(x); near x = 0 the y-parameterization itself limits the
  // attainable agreement, so the tight check starts at 1e-3
  for (double x : linspace(1e-3, kLn2, 500))
    CHECK(rel_err(cfun(x) * x, 4.0 * bp(2.0, x)) < 1e-12);
  for (double x : linspace(1e-5, 1e-3, 100))
    CHECK(rel_err(cfun(x) * x, 4.0 * bp(2.0, x)) < 1e-10);
  // worked value at x = ln2 - h(1/4)
  const double xq = kLn2 - binary_entropy(0.25);
  CHECK(cfun(xq) == doctest::Approx((2.0 - 4.0 * std::sqrt(0.1875)) / xq).epsilon(1e-12));
  // monotone increasing, range [2, 2/ln2]
  double prev = 2.0 - 1e-15;
  for (double x : linspace(0.0, kLn2, 300)) {
    const double c = cfun(x);
    CHECK(c >= prev - 1e-12);
    CHECK(c <= 2.0 / kLn2 + 1e-12);
    prev = c;
  }
}

TEST_CASE("C derivative: series vs closed form vs central differences") {
  CHECK(cprime(0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // h = 1e-4 keeps the difference quotient above the evaluation noise of C
  for (double x : {5e-3, 0.05, 0.2, 0.4, 0.6}) {
    const double h = 1e-4;
    const double fd = (cfun(x + h) - cfun(x - h)) / (2 * h);
    CHECK(rel_err(cprime(x), fd) < 1e-6);
  }
  // near zero only a coarse quotient is numerically meaningful
  for (double x : {1e-6, 1e-4}) {
    const double fd = (cfun(2 * x) - cfun(0.0)) / (2 * x);
    CHECK(rel_err(cprime(x), fd) < 1e-3);
  }
  // continuity across the series/closed-form switch (the two points differ
  // by the genuine slope times 2e-6, so only gross jumps would fail this)
  CHECK(rel_err(cprime(4.9e-5), cprime(5.1e-5)) < 1e-4);
}

TEST_CASE("alpha_p and curve slopes at zero") {
  CHECK(alpha_p(2.0) == doctest::Approx(0.5));
  CHECK(alpha_p(1.0) == doctest::Approx(0.0));
  // forward-difference slope of bp at 0 equals |alpha_p|
  const double h = 1e-7;
  CHECK(bp(2.0, h) / h == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(bp(0.5, h) / h == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("plsi margin: equality family at n = 1") {
  for (double p : {-1.0, 0.5, 1.0, 2.0, 3.0}) {
    for (double y : {0.1, 0.3, 0.45}) {
      CubeFunction f =
          p == 1.0 ? make_cube_function(1, {2 * y, 2 - 2 * y})
                   : make_cube_function(1, {std::pow(2 * y, 1 / p), std::pow(2 - 2 * y, 1 / p)});
      CHECK(std::abs(plsi_margin(f, p)) < 1e-10);
    }
  }
}

TEST_CASE("plsi margin: constants and random functions") {
  for (double p : {0.5, 2.0, 3.0})
    CHECK(std::abs(plsi_margin(constant_function(4, 1.0), p)) < 1e-12);

  Rng rng(23);
  for (double p : {-1.0, 0.5, 1.0, 2.0, 3.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CubeFunction f = random_positive_function(rng, 6);
      CHECK(plsi_margin(f, p) >= -1e-9);
    }
  }
  CHECK_THROWS_AS(plsi_margin(constant_function(2, 1.0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(plsi_margin(make_cube_function(1, {0.0, 1.0}), 0.5), std::domain_error);
}

TEST_CASE("plsi margin tensorizes exactly on product functions") {
  const double a = 0.8, b = 1.7;
  for (double p : {-1.0, 0.5, 1.0, 2.0, 3.0}) {
    const double m1 = plsi_margin(product_function(1, a, b), p);
    const double m4 = plsi_margin(product_function(4, a, b), p);
    CHECK(std::abs(m1 - m4) < 1e-10);
  }
}

TEST_CASE("stroock-varopoulos comparisons") {
  const auto xs = linspace(0.0, kLn2, 2001);
  // p = 2 is the identity comparison
  auto rep = sv_compare(2.0, xs);
  CHECK(std::abs(rep.min_slack_b2) < 1e-15);
  CHECK(!rep.min_slack_b1.has_value());

  rep = sv_compare(4.0, xs);
  CHECK(rep.min_slack_b2 >= -1e-12);

  const auto xs_open = linspace(0.0, kLn2 - 1e-4, 2001);
  rep = sv_compare(0.5, xs_open);
  CHECK(rep.min_slack_b2 >= -1e-12);
  REQUIRE(rep.min_slack_b1.has_value());
  CHECK(*rep.min_slack_b1 >= -1e-12);
}

TEST_CASE("grid helpers") {
  const auto g = step_grid(0.0, 1.0, 0.25);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == doctest::Approx(1.0));
  const auto l = linspace(1.0, 2.0, 3);
  REQUIRE(l.size() == 3);
  CHECK(l[1] == doctest::Approx(1.5));
  CHECK_THROWS_AS(step_grid(1.0, 0.0, 0.5), std::invalid_argument);
}

TEST_SUITE_END();
