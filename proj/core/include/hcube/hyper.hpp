#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hcube/cube_function.hpp"

// Improved hypercontractivity for functions of small support: the exponent
// curve p(t) from the ODE u' = C(rho0 (1 + e^{-u})), the p0 = 2 closed form,
// the firm quadratic-exponent lower bound, the Bonami baseline, and direct
// norm verification ||T_t f||_{p(t)} <= ||f||_{p0}.
//
// Theoretical curves depend only on (p0, rho0). The support-rate conversion
// rho0 = (1 - 1/p0)(1 - R) ln2 is a separate helper so callers can supply
// either a support rate R (in bits) or rho0 directly.

namespace hcube {

enum class HCMethod { ode, closed, firm, bonami };
const char* hc_method_name(HCMethod m);

struct HCCurve {
  double p0 = 2.0;
  double rho0 = 0.0;
  HCMethod method = HCMethod::ode;
  std::vector<double> ts;
  std::vector<double> ps;
};

// Classical curve p(t) = 1 + (p0 - 1) e^{2t}, p0 > 1.
double bonami(double p0, double t);
HCCurve bonami_curve(double p0, std::span<const double> ts);

// ODE curve in u-space: u' = C(rho0(1 + e^{-u})), u(0) = ln(p0 - 1),
// p = 1 + e^u, integrated by fixed-step RK4 (step <= 1e-3). Requires
// rho0 strictly inside (0, (1 - 1/p0) ln2).
HCCurve hc_ode(double p0, double rho0, std::span<const double> ts);

// Generic-family integrator for dp/dt = p(p-1)/rho0 * bp_fn(p, p rho0/(p-1)):
// the same growth bound with a caller-supplied rate curve in place of the
// b2-reduction. With bp_fn = (4|p-1|/p^2) b2 it reproduces hc_ode.
HCCurve hc_ode_family(double p0, double rho0, std::span<const double> ts,
                      const std::function<double(double p, double x)>& bp_fn);

struct TaylorCoeffs {
  double x0 = 0.0;           // rho0 p0 / (p0 - 1)
  double pprime0 = 0.0;      // (p0 - 1) C(x0)
  double pdoubleprime0 = 0.0;
};
TaylorCoeffs hc_taylor(double p0, double rho0);

// p0 = 2 closed form: p(t) = 1 + exp(int_0^t C(max(rho_tilde(s), 0)) ds)
// with rho_tilde(s) = 2 rho0 - ln(2/(1 + e^{-2s})); Simpson quadrature with
// step <= 1e-3. Requires rho0 in (0, ln2/2).
HCCurve hc_closed_p2(double rho0, std::span<const double> ts);

// Firm explicit bound p(t) >= 1 + exp(C(x0) t - C'(x0) t^2/2), x0 = 2 rho0.
double hc_firm(double rho0, double t);
HCCurve hc_firm_curve(double rho0, std::span<const double> ts);

struct HCVerifyReport {
  bool pass = false;
  double worst_rel_excess = 0.0;  // max over the grid of lhs/rhs - 1
  std::vector<double> ts;
  std::vector<double> lhs;        // ||T_t f||_{p(t)}
  double rhs = 0.0;               // ||f||_{p0}
};

// Checks ||T_t f||_{curve.ps[i]} <= ||f||_{p0} (1 + 1e-9) along curve.ts.
HCVerifyReport hc_verify(const CubeFunction& f, double p0, const HCCurve& curve);

// Time beyond which ||T_t f||_inf <= ||f||_{p0} for any f with parameter
// rho0 > 0: ln(1 / (e^{rho0} - 1)).
double large_time_bound(double rho0);

// Empirical exact exponent: for each t solves ||T_t f||_p = ||f||_{p0} for p
// by monotone bisection (tolerance 1e-9 in p); +inf once even the sup norm
// has dropped below ||f||_{p0}. Requires a nonconstant f >= 0.
std::vector<double> exponent_trajectory(const CubeFunction& f, double p0,
                                        std::span<const double> ts);

// rho0 = (1 - 1/p0)(1 - R) ln2 for a support rate R = log2|supp f| / n.
double rho0_from_support_rate(double p0, double R);
// rho0 realized by a concrete function: (1/n) ln(||f||_{p0} / ||f||_1).
double rho0_of(const CubeFunction& f, double p0);

inline constexpr double kHcTolerance = 1e-9;

}  // namespace hcube
