#pragma once

#include <cstdint>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/gf2.hpp"

// Coding-theory application: the weight profile d_r of a linear map
// F_2^k -> F_2^n, the first linear-programming distance curve delta_LP1,
// witness search for the low-image-weight / high-message-weight tradeoff,
// the subspace-uncertainty spectral ratio, and the graph-cover check.

namespace hcube {

// Full message enumeration is capped here.
inline constexpr int kMaxMessageBits = 24;
// Spectral work on F_2^k is capped lower.
inline constexpr int kMaxSpectralBits = 14;

// d_r = min{|x M| : |x| >= r}, exact by enumerating all 2^k messages.
int d_r(const Gf2Matrix& m, int r);
// d_r for every r = 1..k (index 0 unused).
std::vector<int> d_r_table(const Gf2Matrix& m);

// min{|x M| : |x| = w} for w = 0..k; element w may be INT_MAX when no
// message of that weight exists (k < w).
std::vector<int> min_image_weight_by_message_weight(const Gf2Matrix& m);

// Pareto-optimal (message weight, image weight) pairs: larger |x| and
// smaller |x M| are both better; strictly monotone in both coordinates.
std::vector<std::pair<int, int>> pareto_front(const Gf2Matrix& m);

// delta_LP1(R) = 1/2 - sqrt(rho(1-rho)) where h2(rho) = R; the rate R is in
// bits, converted to nats internally for the entropy inversion.
double delta_lp1(double rate_bits);

struct WitnessResult {
  bool found = false;
  std::uint32_t x = 0;          // a witness message (max-min-margin one)
  int x_weight = 0;
  int image_weight = 0;
  double margin_in = 0.0;       // |x|/k - (delta_LP1(R'/R) - slack)
  double margin_out = 0.0;      // (delta_LP1(R') + slack) - |f(x)|/n
  double threshold_in = 0.0;
  double threshold_out = 0.0;
};
// Searches all nonzero messages for |f(x)|/n <= delta_LP1(R') + slack and
// |x|/k >= delta_LP1(R'/R) - slack. The additive slack stands in for the
// vanishing finite-n defect, which carries no explicit constant.
WitnessResult map_witness_search(const Gf2Matrix& m, double rprime, double slack);

struct LemmaRatioResult {
  double ratio_direct = 0.0;   // sum_{w in C, |w|_v <= r} fhat^2 / sum_{w in C} fhat^2
  double ratio_reduced = 0.0;  // same ratio through the quotient function g on F_2^k
  double rho1 = 0.0;           // from |supp f| = 2^{h2(rho1) k}
  double rho2 = 0.0;           // from sum_{j<=r} C(k,j) = 2^{h2(rho2) k}
  double bc_margin = 0.0;      // (1-2rho1)^2 + (1-2rho2)^2 - 1
  bool hyp_support = false;    // k >= log2 |supp f|
  bool hyp_condition = false;  // bc_margin > 0
};
// The subspace-uncertainty ratio for the code with row basis M, computed two
// independent ways: directly on the length-n spectrum, and through the
// reduced function g(x) = |C| (f * 1_{C_perp})(y_x) on F_2^k whose spectrum
// subsamples fhat along the code.
LemmaRatioResult lemma_ratio(const CubeFunction& f, const Gf2Matrix& m, int r);

struct Method1Report {
  int r = 0;          // Fourier cutoff on F_2^k
  int r_ball = 0;     // Hamming ball radius in F_2^n
  double lambda_ball = 0.0;
  double rayleigh = 0.0;      // (A h, h)/||h||^2 for h = h_B - P_{<r} h_B
  double n_minus_2dr = 0.0;
  double leakage = 0.0;       // ||P_{<r} h_B||^2 / ||h_B||^2
  bool bound_holds = false;   // rayleigh <= n - 2 d_r + 1e-9
};
// Graph-cover route: pushes the radial ball eigenvector through the covering
// map y -> M y onto F_2^k, removes the low Fourier band, and compares the
// Cayley-graph Rayleigh quotient against n - 2 d_r. The covering map and the
// pushforward normalization follow the quotient construction; the removed
// mass is reported so the choice stays auditable. r_override >= 0 replaces
// the default cutoff floor(k delta_LP1(R'/R)).
Method1Report code_method1_check(const Gf2Matrix& m, double rprime,
                                 int r_override = -1);

}  // namespace hcube
