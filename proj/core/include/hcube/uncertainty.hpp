#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/subset_spec.hpp"

// Uncertainty-principle machinery: Fourier projections, principal angles
// between the subspace of functions supported on S and the subspace of
// functions with spectrum in Sigma, the two-ball intersection criterion,
// Krawtchouk polynomials, Hamming-ball adjacency eigenpairs, and the
// Hirschmann entropic bound.

namespace hcube {

// Projection onto Fourier weight exactly a / at most r / an arbitrary
// frequency set. All are idempotent and self-adjoint for the uniform measure.
CubeFunction project_weight_eq(const CubeFunction& f, int a);
CubeFunction project_weight_le(const CubeFunction& f, int r);
CubeFunction project_subset(const CubeFunction& f, const SubsetSpec& sigma);

struct AngleReport {
  double cos_angle = 0.0;
  std::string method;      // "svd" or "linear-formula"
  std::size_t dim_s = 0;   // |S|
  std::size_t dim_sigma = 0;
};

// Largest principal cosine via the SVD of the |S| x |Sigma| cross-Gram
// matrix M[x,w] = 2^{-n/2} (-1)^{<w,x>} between the orthonormal bases of
// delta functions on S and characters indexed by Sigma. Guarded at
// |S| * |Sigma| <= 2^20 entries.
AngleReport cos_angle(const SubsetSpec& s, const SubsetSpec& sigma, int n);

// Exact value sqrt(|Sigma cap S_perp| / |S_perp|) for linear S, Sigma.
AngleReport cos_angle_linear(const SubsetSpec& s, const SubsetSpec& sigma, int n);

struct BallConditionResult {
  int regime = 0;          // +1 uncertainty regime, -1 converse regime, 0 critical
  double margin_sq = 0.0;  // (1-2r1)^2 + (1-2r2)^2 - 1
  double margin_lin = 0.0; // 1 - 2 sqrt(r1(1-r1)) - 2 r2 (agrees in sign)
};
BallConditionResult ball_condition(double rho1, double rho2);

// (||f 1_S||_2^2 / ||f||_2^2,  sum_{w in Sigma} fhat(w)^2 / sum_w fhat(w)^2).
std::pair<double, double> concentration_report(const CubeFunction& f,
                                               const SubsetSpec& s,
                                               const SubsetSpec& sigma, int n);

// Tail energies of the geometric witness pair f(x) = alpha^{|x|},
// fhat(w) ~ beta^{|w|} with beta = (1-alpha)/(1+alpha):
//   tail1 = sum_{|x| > rho1 n} f^2 / sum f^2, tail2 likewise for the spectrum.
// Evaluated radially with log-domain binomials, so n up to ~10^6 is fine.
std::pair<double, double> witness_alpha_tails(std::int64_t n, double alpha,
                                              double rho1, double rho2);
// Feasible alpha for the converse regime (midpoint of the admissible
// interval); throws when (rho1, rho2) does not satisfy the converse condition.
double witness_alpha_choice(double rho1, double rho2);

// K_k(x) = sum_j (-1)^j C(x,j) C(n-x, k-j); the radial profile of the sum
// of all weight-k characters.
double krawtchouk(int n, int k, int x);

struct BallPropositionResult {
  bool intersects = false;   // r1 + r2 >= n
  double cos_value = 0.0;    // 1 when intersecting, else the SVD value
  bool witness_ok = false;   // subcube indicator lies in both subspaces
};
// Intersection criterion for S = B_{r1}, Sigma = B_{r2}: cos = 1 iff
// r1 + r2 >= n. The intersecting branch checks the subcube witness exactly;
// the other branch computes the SVD angle (guarded by the cross-Gram size).
BallPropositionResult ball_proposition(int n, int r1, int r2);

struct BallEigen {
  double lambda = 0.0;          // top adjacency eigenvalue of B_r
  std::vector<double> profile;  // radial eigenfunction values, levels 0..r
};
// Top eigenpair of the cube adjacency restricted to the ball B_r, from the
// (r+1)-point symmetrized radial tridiagonal with off-diagonals
// sqrt((j+1)(n-j)).
BallEigen ball_eigen(int n, int r);

// n ln2 - Ent(f^2)/E[f^2] - Ent(fhat^2)/E[fhat^2]; nonnegative, zero on
// characters and their duals.
double hirschmann_slack(const CubeFunction& f);

// Upper bound on theta^2 = sup ||P_Sigma f||^2/||f||^2 over f supported on S
// when |S| = e^{n E1}, |Sigma| = e^{n E2}, E1 + E2 < ln2:
//   theta^2 <= 1 - (delta - ln2/n) / (ln2 - max(E1,E2)), delta = ln2 - E1 - E2.
double cardinality_bound(double e1, double e2, int n);

struct UncertSweepReport {
  std::vector<int> ns;
  std::vector<double> max_ratio;       // max over trials of ||P_{<=r} f|| / ||f||
  std::vector<double> mean_ratio;
  std::vector<double> analytic_bound;  // band bound on ratio^2 from the proof chain
  double fit_slope = 0.0;              // least-squares slope of ln(max_ratio) vs n
};
// Forward-direction sweep: per n draws `trials` random supports of size
// floor(e^{n h(rho1)}) with random signed values and measures the Fourier
// mass below radius floor(rho2 n). The analytic column is the finite-n bound
//   sum_{a<=r} min_t exp(a t - n(ln2 - h(rho1))(1/2 - 1/p(t)))
// with p(t) the ODE curve at p0 = 2, rho0 = (ln2 - h(rho1))/2.
UncertSweepReport uncert_sweep(std::span<const int> ns, double rho1, double rho2,
                               int trials, std::uint64_t seed);

// Least-squares slope of ys against xs.
double fit_slope(std::span<const double> xs, std::span<const double> ys);

}  // namespace hcube
