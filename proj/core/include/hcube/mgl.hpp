#pragma once

#include <span>
#include <vector>

#include "hcube/cube_function.hpp"

// Mrs. Gerber's lemma: the closed-form entropy-decay bound m(t,x), the
// equivalent ODE rho' = -b1(rho), and verification of the bound on concrete
// functions under the heat semigroup.

namespace hcube {

// m(t,x) = h(h^{-1}(ln2 - x) * (1 - e^{-t})/2); m(0,x) = ln2 - x and
// m(t,x) -> ln2 as t -> inf. Domains: t >= 0, x in [0, ln2].
double mgl_m(double t, double x);

// Fixed-step RK4 (step <= 1e-3) for rho' = -b1(rho) on the given grid,
// rho(ts[0]) = rho0. Rejects rho0 outside (0, ln2 - 1e-9): the field blows
// up at ln2.
std::vector<double> ode_decay(double rho0, std::span<const double> ts);

struct DecayTrace {
  std::vector<double> ts;
  std::vector<double> rhos;   // (1/n) Ent(T_t f) / E[f]
  std::vector<double> bound;  // ln2 - m(t - ts[0], rhos[0])
  double worst_gap = 0.0;     // max of rhos - bound
  bool pass = false;          // worst_gap <= 1e-9
};

// Exact normalized entropy of T_t f along the grid against the closed-form
// bound seeded at the first grid point. Requires f >= 0 with E[f] > 0.
DecayTrace verify_mgl(const CubeFunction& f, std::span<const double> ts);

inline constexpr double kMglTolerance = 1e-9;

}  // namespace hcube
