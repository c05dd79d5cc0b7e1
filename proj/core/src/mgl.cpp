#include "hcube/mgl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcube/lsi.hpp"

namespace hcube {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kOdeStep = 1e-3;

// One RK4 step for rho' = -b1(rho); the field is clamped at 0 so a slight
// undershoot of the decaying solution cannot leave the domain.
double field(double rho) { return -b1(std::clamp(rho, 0.0, kLn2 - 1e-12)); }

double rk4_step(double rho, double h) {
  const double k1 = field(rho);
  const double k2 = field(rho + 0.5 * h * k1);
  const double k3 = field(rho + 0.5 * h * k2);
  const double k4 = field(rho + h * k3);
  return rho + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

double mgl_m(double t, double x) {
  if (!(t >= 0.0)) throw std::domain_error("mgl_m requires t >= 0");
  if (!(x >= -1e-12 && x <= kLn2 + 1e-12))
    throw std::domain_error("mgl_m requires x in [0, ln2]");
  x = std::clamp(x, 0.0, kLn2);
  const double a = binary_entropy_inv(kLn2 - x);
  const double b = 0.5 * (1.0 - std::exp(-t));
  return binary_entropy(binary_conv(a, b));
}

std::vector<double> ode_decay(double rho0, std::span<const double> ts) {
  if (!(rho0 > 0.0 && rho0 < kLn2 - 1e-9))
    throw std::domain_error("ode_decay requires rho0 in (0, ln2 - 1e-9)");
  if (ts.empty()) return {};
  std::vector<double> out;
  out.reserve(ts.size());
  double rho = rho0;
  out.push_back(rho);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double span = ts[i] - ts[i - 1];
    if (span < 0.0) throw std::invalid_argument("time grid must be nondecreasing");
    const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(span / kOdeStep)));
    const double h = span / static_cast<double>(steps);
    for (std::size_t s = 0; s < steps; ++s) rho = rk4_step(rho, h);
    rho = std::max(rho, 0.0);
    out.push_back(rho);
  }
  return out;
}

DecayTrace verify_mgl(const CubeFunction& f, std::span<const double> ts) {
  if (f.n < 1) throw std::invalid_argument("verify_mgl requires n >= 1");
  const double ef = mean(f);
  if (!(ef > 0.0)) throw std::domain_error("verify_mgl requires E[f] > 0");
  DecayTrace tr;
  tr.ts.assign(ts.begin(), ts.end());
  tr.rhos.reserve(ts.size());
  for (double t : ts)
    tr.rhos.push_back(entropy(heat(f, t)) / (f.n * ef));
  const double rho0 = std::clamp(tr.rhos.empty() ? 0.0 : tr.rhos.front(), 0.0, kLn2);
  tr.bound.reserve(ts.size());
  for (double t : ts)
    tr.bound.push_back(kLn2 - mgl_m(t - ts.front(), rho0));
  tr.worst_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < tr.ts.size(); ++i)
    tr.worst_gap = std::max(tr.worst_gap, tr.rhos[i] - tr.bound[i]);
  tr.pass = tr.worst_gap <= kMglTolerance;
  return tr;
}

}  // namespace hcube
