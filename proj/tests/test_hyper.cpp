#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcube/hyper.hpp"
#include "hcube/lsi.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"
#include "test_util.hpp"

using namespace hcube;
using namespace hcube_test;

namespace {
constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE_BEGIN("hyper");

TEST_CASE("bonami curve values") {
  CHECK(bonami(2.0, 0.0) == doctest::Approx(2.0));
  CHECK(bonami(2.0, std::log(std::sqrt(2.0))) == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(bonami(1.5, 1.0) == doctest::Approx(1.0 + 0.5 * std::exp(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(bonami(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(bonami(2.0, -0.5), std::domain_error);
}

TEST_CASE("hc_ode basics") {
  const auto ts = step_grid(0.0, 2.0, 0.05);
  const auto curve = hc_ode(2.0, 0.15, ts);
  CHECK(curve.ps.front() == doctest::Approx(2.0));
  for (std::size_t i = 1; i < curve.ps.size(); ++i) CHECK(curve.ps[i] > curve.ps[i - 1]);
  // strict improvement over the classical curve away from t = 0
  for (std::size_t i = 1; i < ts.size(); ++i)
    CHECK(curve.ps[i] > bonami(2.0, ts[i]) + 1e-6);

  // domain guards, including the boundary rho0
  CHECK_THROWS_AS(hc_ode(2.0, 0.0, ts), std::domain_error);
  CHECK_THROWS_AS(hc_ode(2.0, 0.5 * kLn2, ts), std::domain_error);
  CHECK_THROWS_AS(hc_ode(1.0, 0.1, ts), std::domain_error);
}

TEST_CASE("hc_ode degenerates to bonami as rho0 -> 0") {
  const auto ts = step_grid(0.0, 1.0, 0.1);
  const auto curve = hc_ode(2.0, 1e-4, ts);
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(curve.ps[i] / bonami(2.0, ts[i]) == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("taylor coefficients against the ode") {
  const double p0 = 2.0, rho0 = 0.15;
  const auto tc = hc_taylor(p0, rho0);
  CHECK(tc.x0 == doctest::Approx(0.3));
  CHECK(tc.pprime0 == doctest::Approx(cfun(0.3)).epsilon(1e-14));

  // first-order: (p(h) - p0)/h
  {
    const double h = 1e-5;
    const std::vector<double> grid{0.0, h};
    const auto c = hc_ode(p0, rho0, grid);
    CHECK(rel_err((c.ps[1] - p0) / h, tc.pprime0) < 1e-3);
  }
  // second-order: (p(h) - p0 - p'(0) h)/h^2 -> p''(0)/2
  {
    const double h = 1e-3;
    const std::vector<double> grid{0.0, h};
    const auto c = hc_ode(p0, rho0, grid);
    const double second = (c.ps[1] - p0 - tc.pprime0 * h) / (h * h);
    CHECK(rel_err(second, 0.5 * tc.pdoubleprime0) < 5e-2);
  }
  // x0 -> ln2 endpoint: p'(0) approaches (p0-1) 2/ln2
  {
    const double rho_edge = 0.5 * kLn2 * (1.0 - 1e-7);
    const auto edge = hc_taylor(2.0, rho_edge);
    CHECK(edge.pprime0 == doctest::Approx(2.0 / kLn2).epsilon(1e-3));
  }
}

TEST_CASE("closed form at p0 = 2") {
  const auto ts = step_grid(0.0, 2.0, 0.05);
  const double rho0 = 0.15;
  const auto closed = hc_closed_p2(rho0, ts);
  CHECK(closed.ps.front() == doctest::Approx(2.0));

  // slope at zero equals C(x0)
  {
    const double h = 1e-5;
    const std::vector<double> grid{0.0, h};
    const auto c = hc_closed_p2(rho0, grid);
    CHECK(rel_err((c.ps[1] - 2.0) / h, cfun(2 * rho0)) < 1e-3);
  }
  // eventually the clamp makes the integrand C(0) = 2 and p grows like e^{2t}
  {
    const std::vector<double> grid{5.0, 5.5, 6.0};
    const auto c = hc_closed_p2(rho0, grid);
    const double r0 = c.ps[0] / std::exp(2.0 * 5.0);
    const double r1 = c.ps[2] / std::exp(2.0 * 6.0);
    CHECK(rel_err(r0, r1) < 1e-3);
  }
  CHECK_THROWS_AS(hc_closed_p2(0.5 * kLn2, ts), std::domain_error);
}

TEST_CASE("firm bound ordering") {
  const double rho0 = 0.15;
  CHECK(hc_firm(rho0, 0.0) == doctest::Approx(2.0));

  // bonami <= firm <= closed on a grid below the quadratic crossover
  const double x0 = 2 * rho0;
  const double tmax = (cfun(x0) - 2.0) / cprime(x0);
  const auto ts = step_grid(0.0, std::min(2.0, tmax), std::min(2.0, tmax) / 40);
  const auto closed = hc_closed_p2(rho0, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double firm = hc_firm(rho0, ts[i]);
    CHECK(bonami(2.0, ts[i]) <= firm + 1e-9);
    CHECK(firm <= closed.ps[i] + 1e-9);
  }
  // firm <= closed holds for all t, not just small t
  const auto ts_long = step_grid(0.0, 5.0, 0.25);
  const auto closed_long = hc_closed_p2(rho0, ts_long);
  for (std::size_t i = 0; i < ts_long.size(); ++i)
    CHECK(hc_firm(rho0, ts_long[i]) <= closed_long.ps[i] + 1e-9);

  // rho0 -> 0: C -> 2 and C' -> 1/3, so the limit exponent is 2t - t^2/6
  for (double t : {0.5, 1.0}) {
    CHECK(hc_firm(1e-6, t) / (1.0 + std::exp(2.0 * t - t * t / 6.0)) ==
          doctest::Approx(1.0).epsilon(1e-4));
    CHECK(hc_firm(1e-6, t) / (1.0 + std::exp(2.0 * t)) == doctest::Approx(1.0).epsilon(0.1));
  }
}

TEST_CASE("generic-family integrator reproduces the b2 reduction") {
  const auto ts = step_grid(0.0, 1.5, 0.1);
  const auto base = hc_ode(2.0, 0.2, ts);
  const auto fam = hc_ode_family(2.0, 0.2, ts, [](double p, double x) {
    return 4.0 * std::abs(p - 1.0) / (p * p) * bp(2.0, x);
  });
  for (std::size_t i = 0; i < ts.size(); ++i)
    CHECK(rel_err(base.ps[i], fam.ps[i]) < 1e-9);
}

TEST_CASE("hc_verify on indicators and the classical curve") {
  Rng rng(41);
  const auto ts = step_grid(0.0, 2.0, 0.1);

  // indicator with R = 0.5, p0 = 2: rho0 realized is exactly (1-R) ln2 / 2
  const CubeFunction ind = random_indicator(rng, 10, 0.5);
  const double rho0 = rho0_of(ind, 2.0);
  CHECK(rho0 == doctest::Approx(rho0_from_support_rate(2.0, 0.5)).epsilon(1e-12));
  CHECK(hc_verify(ind, 2.0, hc_ode(2.0, rho0, ts)).pass);

  // the classical curve works for any nonnegative f
  for (int trial = 0; trial < 10; ++trial) {
    const CubeFunction f = random_nonneg_function(rng, 6);
    if (support_count(f) == 0) continue;
    CHECK(hc_verify(f, 2.0, bonami_curve(2.0, ts)).pass);
  }

  // constants sit exactly on the norm equality
  const auto rep = hc_verify(constant_function(5, 1.0), 2.0, bonami_curve(2.0, ts));
  CHECK(rep.pass);
  CHECK(std::abs(rep.worst_rel_excess) < 1e-12);

  CHECK_THROWS_AS(hc_verify(make_cube_function(1, {-1.0, 1.0}), 2.0, bonami_curve(2.0, ts)),
                  std::domain_error);
}

TEST_CASE("large_time_bound") {
  CHECK(large_time_bound(kLn2) == doctest::Approx(0.0));
  CHECK(large_time_bound(1e-9) > 19.0);  // diverges as rho0 -> 0
  CHECK_THROWS_AS(large_time_bound(0.0), std::domain_error);

  Rng rng(42);
  const CubeFunction ind = random_indicator(rng, 10, 0.5);
  const double rho0 = rho0_of(ind, 2.0);
  const double tstar = large_time_bound(rho0);
  CHECK(lp_norm(heat(ind, tstar), kInf) <= lp_norm(ind, 2.0) * (1 + 1e-9));
}

TEST_CASE("empirical exponent trajectory dominates the theoretical curves") {
  Rng rng(43);
  const CubeFunction ind = random_indicator(rng, 8, 0.5);
  const auto ts = step_grid(0.0, 1.5, 0.25);
  const auto emp = exponent_trajectory(ind, 2.0, ts);
  CHECK(emp.front() == doctest::Approx(2.0).epsilon(1e-9));
  const auto ode = hc_ode(2.0, rho0_of(ind, 2.0), ts);
  double prev = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    CHECK(emp[i] >= ode.ps[i] - 1e-6);
    if (std::isfinite(emp[i])) {
      CHECK(emp[i] > prev);
      prev = emp[i];
    }
  }
  CHECK_THROWS_AS(exponent_trajectory(constant_function(3, 2.0), 2.0, ts), std::domain_error);
}

TEST_CASE("empirical exponent growth dominates the nonlinear-LSI rate") {
  // For the exact curve p1 defined by ||T_t f||_{p1(t)} = ||f||_{p0}, the
  // growth rate is at least p(p-1)/rho0 * b_p(p rho0/(p-1)) at p = p1(t).
  // Since that rate increases along the curve, the integral form
  //   p1(t+h) - p1(t) >= h * rate(p1(t))
  // holds exactly and needs no derivative estimation.
  Rng rng(45);
  const CubeFunction f = random_indicator(rng, 8, 0.5);
  const double rho0 = rho0_of(f, 2.0);
  const auto ts = step_grid(0.0, 0.6, 0.05);
  const auto emp = exponent_trajectory(f, 2.0, ts);
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    if (!std::isfinite(emp[i]) || !std::isfinite(emp[i + 1])) break;
    const double p = emp[i];
    const double x = std::min(p * rho0 / (p - 1.0), kLn2);
    const double rate = p * (p - 1.0) / rho0 * bp(p, x);
    const double h = ts[i + 1] - ts[i];
    CHECK(emp[i + 1] - emp[i] >= h * rate - 1e-6);
  }
}

TEST_CASE("two-norm lower bound under heat") {
  // ||T_t f||_2^2 >= ((1 + e^{-2t})/2)^n ||f||_2^2 for nonnegative f,
  // with equality for a point mass
  Rng rng(44);
  for (double t : {0.2, 0.7, 1.5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const CubeFunction f = random_nonneg_function(rng, 6);
      if (support_count(f) == 0) continue;
      const double lhs = std::pow(lp_norm(heat(f, t), 2.0), 2);
      const double rhs = std::pow(0.5 * (1 + std::exp(-2 * t)), 6) * std::pow(lp_norm(f, 2.0), 2);
      CHECK(lhs >= rhs * (1 - 1e-10));
    }
    const CubeFunction delta = point_mass(5, 3);
    const double lhs = std::pow(lp_norm(heat(delta, t), 2.0), 2);
    const double rhs = std::pow(0.5 * (1 + std::exp(-2 * t)), 5) * std::pow(lp_norm(delta, 2.0), 2);
    CHECK(rel_err(lhs, rhs) < 1e-12);
  }
}

TEST_SUITE_END();
