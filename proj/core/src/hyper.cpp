#include "hcube/hyper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcube/lsi.hpp"

namespace hcube {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kOdeStep = 1e-3;
constexpr double kQuadStep = 1e-3;

void check_rho0(double p0, double rho0) {
  if (!(p0 > 1.0)) throw std::domain_error("requires p0 > 1");
  const double hi = (1.0 - 1.0 / p0) * kLn2;
  if (!(rho0 > 0.0 && rho0 < hi - 1e-12))
    throw std::domain_error("requires rho0 strictly inside (0, (1-1/p0) ln2)");
}

void check_grid(std::span<const double> ts) {
  if (ts.empty()) throw std::invalid_argument("empty time grid");
  if (ts.front() < 0.0) throw std::invalid_argument("time grid must start at t >= 0");
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (ts[i] < ts[i - 1]) throw std::invalid_argument("time grid must be nondecreasing");
}

// RK4 over [t0, t1] for u' = g(u), splitting into steps of at most kOdeStep.
template <typename Field>
double rk4_span(double u, double t0, double t1, Field g) {
  const double span = t1 - t0;
  if (span <= 0.0) return u;
  const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / kOdeStep)));
  const double h = span / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const double k1 = g(u);
    const double k2 = g(u + 0.5 * h * k1);
    const double k3 = g(u + 0.5 * h * k2);
    const double k4 = g(u + h * k3);
    u += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return u;
}

}  // namespace

const char* hc_method_name(HCMethod m) {
  switch (m) {
    case HCMethod::ode: return "ode";
    case HCMethod::closed: return "hcc-closed";
    case HCMethod::firm: return "hcc-firm";
    case HCMethod::bonami: return "bonami";
  }
  return "?";
}

double bonami(double p0, double t) {
  if (!(p0 > 1.0)) throw std::domain_error("bonami requires p0 > 1");
  if (!(t >= 0.0)) throw std::domain_error("bonami requires t >= 0");
  return 1.0 + (p0 - 1.0) * std::exp(2.0 * t);
}

HCCurve bonami_curve(double p0, std::span<const double> ts) {
  check_grid(ts);
  HCCurve curve{p0, 0.0, HCMethod::bonami, {ts.begin(), ts.end()}, {}};
  curve.ps.reserve(ts.size());
  for (double t : ts) curve.ps.push_back(bonami(p0, t));
  return curve;
}

HCCurve hc_ode(double p0, double rho0, std::span<const double> ts) {
  check_rho0(p0, rho0);
  check_grid(ts);
  auto g = [rho0](double u) {
    const double arg = rho0 * (1.0 + std::exp(-u));
    // For admissible rho0 the argument stays inside (0, ln2).
    return cfun(std::clamp(arg, 0.0, kLn2));
  };
  HCCurve curve{p0, rho0, HCMethod::ode, {ts.begin(), ts.end()}, {}};
  curve.ps.reserve(ts.size());
  double u = std::log(p0 - 1.0);
  u = rk4_span(u, 0.0, ts.front(), g);
  curve.ps.push_back(1.0 + std::exp(u));
  for (std::size_t i = 1; i < ts.size(); ++i) {
    u = rk4_span(u, ts[i - 1], ts[i], g);
    curve.ps.push_back(1.0 + std::exp(u));
  }
  return curve;
}

HCCurve hc_ode_family(double p0, double rho0, std::span<const double> ts,
                      const std::function<double(double, double)>& bp_fn) {
  check_rho0(p0, rho0);
  check_grid(ts);
  // In u-space: u' = p'/(p-1) = p / rho0 * bp_fn(p, p rho0 / (p-1)).
  auto g = [rho0, &bp_fn](double u) {
    const double p = 1.0 + std::exp(u);
    const double x = std::clamp(rho0 * (1.0 + std::exp(-u)), 0.0, kLn2);
    return p / rho0 * bp_fn(p, x);
  };
  HCCurve curve{p0, rho0, HCMethod::ode, {ts.begin(), ts.end()}, {}};
  curve.ps.reserve(ts.size());
  double u = std::log(p0 - 1.0);
  u = rk4_span(u, 0.0, ts.front(), g);
  curve.ps.push_back(1.0 + std::exp(u));
  for (std::size_t i = 1; i < ts.size(); ++i) {
    u = rk4_span(u, ts[i - 1], ts[i], g);
    curve.ps.push_back(1.0 + std::exp(u));
  }
  return curve;
}

TaylorCoeffs hc_taylor(double p0, double rho0) {
  check_rho0(p0, rho0);
  TaylorCoeffs tc;
  tc.x0 = rho0 * p0 / (p0 - 1.0);
  const double c = cfun(tc.x0);
  const double cp = cprime(tc.x0);
  tc.pprime0 = (p0 - 1.0) * c;
  tc.pdoubleprime0 = (p0 - 1.0) * (c * c - cp * c * tc.x0 / p0);
  return tc;
}

HCCurve hc_closed_p2(double rho0, std::span<const double> ts) {
  check_rho0(2.0, rho0);
  check_grid(ts);
  const double x0 = 2.0 * rho0;
  auto integrand = [x0](double s) {
    const double rho = x0 - std::log(2.0 / (1.0 + std::exp(-2.0 * s)));
    return cfun(std::clamp(rho, 0.0, kLn2));
  };
  HCCurve curve{2.0, rho0, HCMethod::closed, {ts.begin(), ts.end()}, {}};
  curve.ps.reserve(ts.size());
  double integral = 0.0;
  double t_prev = 0.0;
  for (double t : ts) {
    const double span = t - t_prev;
    if (span > 0.0) {
      const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / kQuadStep)));
      const double h = span / static_cast<double>(steps);
      for (std::size_t s = 0; s < steps; ++s) {
        const double a = t_prev + h * static_cast<double>(s);
        integral += h / 6.0 * (integrand(a) + 4.0 * integrand(a + 0.5 * h) + integrand(a + h));
      }
      t_prev = t;
    }
    curve.ps.push_back(1.0 + std::exp(integral));
  }
  return curve;
}

double hc_firm(double rho0, double t) {
  check_rho0(2.0, rho0);
  if (!(t >= 0.0)) throw std::domain_error("hc_firm requires t >= 0");
  const double x0 = 2.0 * rho0;
  return 1.0 + std::exp(cfun(x0) * t - 0.5 * cprime(x0) * t * t);
}

HCCurve hc_firm_curve(double rho0, std::span<const double> ts) {
  check_grid(ts);
  HCCurve curve{2.0, rho0, HCMethod::firm, {ts.begin(), ts.end()}, {}};
  curve.ps.reserve(ts.size());
  for (double t : ts) curve.ps.push_back(hc_firm(rho0, t));
  return curve;
}

HCVerifyReport hc_verify(const CubeFunction& f, double p0, const HCCurve& curve) {
  for (double v : f.values)
    if (v < 0.0) throw std::domain_error("hc_verify requires f >= 0");
  if (curve.ts.size() != curve.ps.size())
    throw std::invalid_argument("curve grids out of sync");
  HCVerifyReport rep;
  rep.ts = curve.ts;
  rep.rhs = lp_norm(f, p0);
  if (!(rep.rhs > 0.0)) throw std::domain_error("hc_verify requires f != 0");
  rep.lhs.reserve(curve.ts.size());
  rep.worst_rel_excess = -kInf;
  for (std::size_t i = 0; i < curve.ts.size(); ++i) {
    const double lhs = lp_norm(heat(f, curve.ts[i]), curve.ps[i]);
    rep.lhs.push_back(lhs);
    rep.worst_rel_excess = std::max(rep.worst_rel_excess, lhs / rep.rhs - 1.0);
  }
  rep.pass = rep.worst_rel_excess <= kHcTolerance;
  return rep;
}

double large_time_bound(double rho0) {
  if (!(rho0 > 0.0)) throw std::domain_error("large_time_bound requires rho0 > 0");
  return -std::log(std::expm1(rho0));
}

std::vector<double> exponent_trajectory(const CubeFunction& f, double p0,
                                        std::span<const double> ts) {
  if (!(p0 > 1.0)) throw std::domain_error("requires p0 > 1");
  check_grid(ts);
  for (double v : f.values)
    if (v < 0.0) throw std::domain_error("exponent_trajectory requires f >= 0");
  const auto [mn, mx] = std::minmax_element(f.values.begin(), f.values.end());
  if (*mn == *mx) throw std::domain_error("exponent_trajectory requires nonconstant f");
  const double log_target = log_lp_norm(f, p0);

  std::vector<double> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const CubeFunction g = heat(f, t);
    if (log_lp_norm(g, kInf) <= log_target) {
      out.push_back(kInf);  // past the sup-norm crossing time
      continue;
    }
    auto phi = [&](double p) { return log_lp_norm(g, p) - log_target; };
    double lo = p0;
    const double phi_lo = phi(lo);
    if (phi_lo <= 0.0 && phi_lo > -1e-14) {
      out.push_back(p0);
      continue;
    }
    double hi = std::max(bonami(p0, t) * std::exp(10.0), p0 + 1.0);
    int expansions = 0;
    while (phi(hi) < 0.0 && expansions < 8) {
      hi *= std::exp(10.0);
      ++expansions;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-9; ++i) {
      const double mid = 0.5 * (lo + hi);
      (phi(mid) < 0.0 ? lo : hi) = mid;
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

double rho0_from_support_rate(double p0, double R) {
  if (!(p0 > 1.0)) throw std::domain_error("requires p0 > 1");
  if (!(R >= 0.0 && R <= 1.0)) throw std::domain_error("requires R in [0,1]");
  return (1.0 - 1.0 / p0) * (1.0 - R) * kLn2;
}

double rho0_of(const CubeFunction& f, double p0) {
  if (f.n < 1) throw std::invalid_argument("rho0_of requires n >= 1");
  return (log_lp_norm(f, p0) - log_lp_norm(f, 1.0)) / f.n;
}

}  // namespace hcube
