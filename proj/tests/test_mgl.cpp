#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hcube/lsi.hpp"
#include "hcube/mgl.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"
#include "test_util.hpp"

using namespace hcube;
using namespace hcube_test;

namespace {
constexpr double kLn2 = std::numbers::ln2;
}

TEST_SUITE_BEGIN("mgl");

TEST_CASE("closed form m(t, x)") {
  for (double x : {0.0, 0.2, 0.5, kLn2})
    CHECK(kLn2 - mgl_m(0.0, x) == doctest::Approx(x).epsilon(1e-13));
  CHECK(kLn2 - mgl_m(50.0, 0.3) < 1e-15);
  // composition oracle: m = h(a * b)
  {
    const double t = 0.5, x = 0.2;
    const double a = binary_entropy_inv(kLn2 - x);
    const double b = 0.5 * (1.0 - std::exp(-t));
    CHECK(mgl_m(t, x) == doctest::Approx(binary_entropy(binary_conv(a, b))).epsilon(1e-14));
  }
  CHECK_THROWS_AS(mgl_m(-0.1, 0.2), std::domain_error);
  CHECK_THROWS_AS(mgl_m(0.1, kLn2 + 0.01), std::domain_error);
}

TEST_CASE("ode_decay matches the closed form") {
  const auto ts = step_grid(0.0, 3.0, 0.05);
  for (double rho0 : {0.1, 0.3, 0.6}) {
    const auto rho = ode_decay(rho0, ts);
    REQUIRE(rho.size() == ts.size());
    CHECK(rho.front() == rho0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double closed = kLn2 - mgl_m(ts[i], rho0);
      CHECK(std::abs(rho[i] - closed) < 1e-6);
    }
    for (std::size_t i = 1; i < rho.size(); ++i) CHECK(rho[i] < rho[i - 1]);
  }
}

TEST_CASE("near zero the decay linearizes to exp(-2t)") {
  const double rho0 = 1e-4;
  const auto ts = step_grid(0.0, 1.0, 0.25);
  const auto rho = ode_decay(rho0, ts);
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(rho[i] / (rho0 * std::exp(-2.0 * ts[i])) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("the closed form satisfies the decay equation") {
  // residual |rho' + b1(rho)| along rho(t) = ln2 - m(t, x0)
  const double x0 = kLn2 - binary_entropy(0.3);
  for (double t : {0.1, 0.5, 1.0, 2.0}) {
    const double h = 1e-6;
    const double dm = (mgl_m(t + h, x0) - mgl_m(t - h, x0)) / (2 * h);
    const double rho = kLn2 - mgl_m(t, x0);
    CHECK(std::abs(-dm + b1(rho)) < 1e-6);
  }
}

TEST_CASE("ode_decay domain guards") {
  const auto ts = step_grid(0.0, 1.0, 0.5);
  CHECK_THROWS_AS(ode_decay(kLn2, ts), std::domain_error);
  CHECK_THROWS_AS(ode_decay(kLn2 - 1e-12, ts), std::domain_error);
  CHECK_THROWS_AS(ode_decay(0.0, ts), std::domain_error);
  CHECK_THROWS_AS(ode_decay(-0.1, ts), std::domain_error);
}

TEST_CASE("psi = b1(x)/x is nondecreasing") {
  double prev = 0.0;
  for (double x : linspace(1e-6, kLn2 - 1e-6, 2000)) {
    const double psi = b1(x) / x;
    CHECK(psi >= prev - 1e-12);
    prev = psi;
  }
}

TEST_CASE("verify_mgl: product functions meet the bound with equality") {
  const auto ts = step_grid(0.0, 2.0, 0.1);
  const auto tr = verify_mgl(product_function(4, 0.5, 1.5), ts);
  CHECK(tr.pass);
  CHECK(std::abs(tr.rhos.front() - tr.bound.front()) < 1e-10);  // equality at t = 0
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(std::abs(tr.rhos[i] - tr.bound[i]) < 1e-9);  // the bound is tight throughout
}

TEST_CASE("verify_mgl: ball indicators decay strictly faster") {
  std::vector<double> v(256, 0.0);
  for (std::size_t x = 0; x < 256; ++x)
    if (std::popcount(x) <= 2) v[x] = 1.0;
  const CubeFunction f = make_cube_function(8, std::move(v));
  const auto ts = step_grid(0.0, 2.0, 0.25);
  const auto tr = verify_mgl(f, ts);
  CHECK(tr.pass);
  for (std::size_t i = 1; i < ts.size(); ++i)
    CHECK(tr.bound[i] - tr.rhos[i] > 1e-6);  // strict for t > 0
}

TEST_CASE("verify_mgl: constants and random nonnegative functions") {
  const auto ts = step_grid(0.0, 3.0, 0.5);
  const auto tr = verify_mgl(constant_function(5, 1.0), ts);
  CHECK(tr.pass);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(std::abs(tr.rhos[i]) < 1e-14);
    CHECK(std::abs(tr.bound[i]) < 1e-12);
  }

  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const CubeFunction f = random_nonneg_function(rng, 6);
    if (support_count(f) == 0) continue;
    CHECK(verify_mgl(f, ts).pass);
  }
  // rho is nonincreasing along the trace
  const CubeFunction f = random_nonneg_function(rng, 6);
  const auto tr2 = verify_mgl(f, ts);
  for (std::size_t i = 1; i < tr2.rhos.size(); ++i)
    CHECK(tr2.rhos[i] <= tr2.rhos[i - 1] + 1e-12);

  CHECK_THROWS_AS(verify_mgl(constant_function(3, 0.0), ts), std::domain_error);
}

TEST_SUITE_END();
