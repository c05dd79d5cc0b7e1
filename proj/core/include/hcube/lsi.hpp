#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcube/cube_function.hpp"

// Closed-form curves of the nonlinear log-Sobolev inequalities on the cube,
// and direct verification of the inequalities on concrete functions.
//
// All curves are parameterized internally by y in (0, 1/2] through
// x = ln2 - h(y); the inversion x -> y runs a bisection on h, so no
// transcendental equation is ever solved in x directly.

namespace hcube {

// Natural-log binary entropy h(y) = -y ln y - (1-y) ln(1-y).
double binary_entropy(double y);
// Functional inverse [0, ln2] -> [0, 1/2], bisection to ~1e-15.
double binary_entropy_inv(double z);
// a*b = (1-a)b + (1-b)a on [0,1]^2.
double binary_conv(double a, double b);

// b1: [0, ln2) -> [0, inf), b1(ln2 - h(y)) = (1/2 - y) ln((1-y)/y).
// Convex, increasing, b1(0) = 0; returns +inf at x = ln2 and rejects x > ln2.
double b1(double x);

// bp for p outside {0,1}:
//   bp(ln2 - h(y)) = sgn(p-1)/2 * (1 - y^{1/p}(1-y)^{1-1/p} - y^{1-1/p}(1-y)^{1/p}).
// Defined on [0, ln2] for p > 1; for p < 1 the endpoint x = ln2 (y = 0) is
// rejected since the negative powers of y diverge.
double bp(double p, double x);

// C(x) = 4 b2(x)/x on [0, ln2], continuously extended by C(0) = 2; it is a
// smooth convex increasing bijection onto [2, 2/ln2].
double cfun(double x);
// dC/dx via the chain rule through the y-parameterization, with a series
// fallback near y = 1/2 where the closed form cancels catastrophically.
double cprime(double x);

// Classical linear LSI constant 2(p-1)/p^2.
double alpha_p(double p);

// Margin of the tensorized nonlinear p-LSI on f:
//   sgn(p-1) (1/n) E(f, f^{p-1}) / E[f^p]  -  bp((1/n) Ent(f^p) / E[f^p]),
// with the p = 1 case reading E(f, ln f) and b1. Nonnegative margin = pass.
// Requires f >= 0, and f > 0 when p <= 1.
double plsi_margin(const CubeFunction& f, double p);

// Stroock-Varopoulos comparisons of bp against b2 (all p != 1) and against
// b1 (p < 1), evaluated pointwise on a grid.
struct SvCompareReport {
  double p = 0.0;
  double min_slack_b2 = 0.0;              // min of bp(x) - 4|p-1|/p^2 * b2(x)
  std::optional<double> min_slack_b1;     // min of bp(x) - (1-p)/p^2 * b1(x), p < 1
  std::size_t points = 0;
};
SvCompareReport sv_compare(double p, std::span<const double> xs);

// Sampled curve with metadata, the common output type of the CLI.
struct CurveSamples {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::vector<double> xs;
  std::vector<double> ys;
};

// Evenly spaced helpers.
std::vector<double> linspace(double lo, double hi, std::size_t count);
// start:stop:step grid, inclusive of stop up to rounding.
std::vector<double> step_grid(double start, double stop, double step);

}  // namespace hcube
