#include "hcube/uncertainty.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcube/hyper.hpp"
#include "hcube/lsi.hpp"
#include "hcube/random.hpp"
#include "hcube/rng.hpp"

namespace hcube {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr std::size_t kCrossGramGuard = std::size_t{1} << 20;

double log_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n + 1)) -
         std::lgamma(static_cast<double>(k + 1)) -
         std::lgamma(static_cast<double>(n - k + 1));
}

int popcount32(std::uint32_t x) { return std::popcount(x); }

}  // namespace

CubeFunction project_weight_eq(const CubeFunction& f, int a) {
  Spectrum s = wht(f);
  for (std::size_t w = 0; w < s.coeffs.size(); ++w)
    if (popcount32(static_cast<std::uint32_t>(w)) != a) s.coeffs[w] = 0.0;
  return iwht(s);
}

CubeFunction project_weight_le(const CubeFunction& f, int r) {
  Spectrum s = wht(f);
  for (std::size_t w = 0; w < s.coeffs.size(); ++w)
    if (popcount32(static_cast<std::uint32_t>(w)) > r) s.coeffs[w] = 0.0;
  return iwht(s);
}

CubeFunction project_subset(const CubeFunction& f, const SubsetSpec& sigma) {
  const auto keep = materialize(sigma, f.n);
  std::vector<char> mask(domain_size(f.n), 0);
  for (std::uint32_t w : keep) mask[w] = 1;
  Spectrum s = wht(f);
  for (std::size_t w = 0; w < s.coeffs.size(); ++w)
    if (!mask[w]) s.coeffs[w] = 0.0;
  return iwht(s);
}

AngleReport cos_angle(const SubsetSpec& s, const SubsetSpec& sigma, int n) {
  const auto xs = materialize(s, n);
  const auto ws = materialize(sigma, n);
  if (xs.empty() || ws.empty()) throw std::invalid_argument("cos_angle: empty subset");
  if (xs.size() * ws.size() > kCrossGramGuard)
    throw std::invalid_argument("cos_angle: cross-Gram matrix above the 2^20 entry guard");
  const double scale = std::exp2(-0.5 * n);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ws.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (popcount32(xs[i] & ws[j]) & 1) ? -scale : scale;
  double sigma_max;
  if (xs.size() == 1 || ws.size() == 1) {
    sigma_max = m.norm();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
    sigma_max = svd.singularValues()(0);
  }
  return {std::min(sigma_max, 1.0 + 1e-12), "svd", xs.size(), ws.size()};
}

AngleReport cos_angle_linear(const SubsetSpec& s, const SubsetSpec& sigma, int n) {
  if (s.kind != SubsetSpec::Kind::linear || sigma.kind != SubsetSpec::Kind::linear)
    throw std::invalid_argument("cos_angle_linear requires linear specs");
  if (s.basis.cols() != static_cast<std::size_t>(n) ||
      sigma.basis.cols() != static_cast<std::size_t>(n))
    throw std::invalid_argument("basis width != n");
  const Gf2Matrix s_perp = nullspace(s.basis);
  // dim(Sigma cap S_perp) = dim Sigma + dim S_perp - dim(Sigma + S_perp).
  const std::size_t dim_sigma = sigma.basis.rows();
  const std::size_t dim_perp = s_perp.rows();
  const std::size_t dim_sum = rank(stack(sigma.basis, s_perp));
  const std::size_t dim_int = dim_sigma + dim_perp - dim_sum;
  const double cosv = std::exp2(0.5 * (static_cast<double>(dim_int) - static_cast<double>(dim_perp)));
  return {cosv, "linear-formula", subset_size(s, n), subset_size(sigma, n)};
}

BallConditionResult ball_condition(double rho1, double rho2) {
  if (!(rho1 >= 0.0 && rho1 <= 0.5 && rho2 >= 0.0 && rho2 <= 0.5))
    throw std::domain_error("ball_condition requires rho in [0, 1/2]");
  BallConditionResult r;
  const double a = 1.0 - 2.0 * rho1;
  const double b = 1.0 - 2.0 * rho2;
  r.margin_sq = a * a + b * b - 1.0;
  r.margin_lin = 1.0 - 2.0 * std::sqrt(rho1 * (1.0 - rho1)) - 2.0 * rho2;
  constexpr double tol = 1e-12;
  const int sign_sq = r.margin_sq > tol ? 1 : (r.margin_sq < -tol ? -1 : 0);
  const int sign_lin = r.margin_lin > tol ? 1 : (r.margin_lin < -tol ? -1 : 0);
  if (sign_sq != 0 && sign_lin != 0 && sign_sq != sign_lin)
    throw std::logic_error("equivalent ball conditions disagree in sign");
  r.regime = sign_sq;
  return r;
}

std::pair<double, double> concentration_report(const CubeFunction& f,
                                               const SubsetSpec& s,
                                               const SubsetSpec& sigma, int n) {
  if (f.n != n) throw std::invalid_argument("dimension mismatch");
  double on_s = 0.0, total = 0.0;
  {
    std::vector<char> in_s(domain_size(n), 0);
    for (std::uint32_t x : materialize(s, n)) in_s[x] = 1;
    for (std::size_t x = 0; x < f.values.size(); ++x) {
      const double sq = f.values[x] * f.values[x];
      total += sq;
      if (in_s[x]) on_s += sq;
    }
  }
  double on_sigma = 0.0, total_hat = 0.0;
  {
    const Spectrum sp = wht(f);
    std::vector<char> in_sig(domain_size(n), 0);
    for (std::uint32_t w : materialize(sigma, n)) in_sig[w] = 1;
    for (std::size_t w = 0; w < sp.coeffs.size(); ++w) {
      const double sq = sp.coeffs[w] * sp.coeffs[w];
      total_hat += sq;
      if (in_sig[w]) on_sigma += sq;
    }
  }
  if (total == 0.0) throw std::domain_error("concentration_report of the zero function");
  return {on_s / total, on_sigma / total_hat};
}

std::pair<double, double> witness_alpha_tails(std::int64_t n, double alpha,
                                              double rho1, double rho2) {
  if (alpha == 1.0 || alpha == -1.0)
    throw std::domain_error("witness requires alpha != +-1");
  const double beta = (1.0 - alpha) / (1.0 + alpha);
  auto radial_tail = [n](double ratio, double cut) {
    // mass of sum_{j > cut} C(n,j) ratio^{2j} relative to the full sum,
    // computed with log-domain terms.
    const double l2r = 2.0 * std::log(std::abs(ratio));
    double lmax_all = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j <= n; ++j)
      lmax_all = std::max(lmax_all, log_choose(n, j) + l2r * static_cast<double>(j));
    double all = 0.0, tail = 0.0;
    for (std::int64_t j = 0; j <= n; ++j) {
      const double term = std::exp(log_choose(n, j) + l2r * static_cast<double>(j) - lmax_all);
      all += term;
      if (static_cast<double>(j) > cut) tail += term;
    }
    return tail / all;
  };
  return {radial_tail(alpha, rho1 * static_cast<double>(n)),
          radial_tail(beta, rho2 * static_cast<double>(n))};
}

double witness_alpha_choice(double rho1, double rho2) {
  const BallConditionResult cond = ball_condition(rho1, rho2);
  if (cond.regime >= 0)
    throw std::domain_error("witness alpha exists only in the converse regime");
  // Need 1/(1+alpha^-2) < rho1 and 1/(1+beta^-2) < rho2, beta = (1-a)/(1+a).
  const double amax = std::sqrt(rho1 / (1.0 - rho1));
  const double bmax = std::sqrt(rho2 / (1.0 - rho2));
  const double amin = (1.0 - bmax) / (1.0 + bmax);
  if (!(amin < amax)) throw std::logic_error("no feasible alpha despite converse regime");
  return 0.5 * (amin + amax);
}

double krawtchouk(int n, int k, int x) {
  if (k < 0 || k > n || x < 0 || x > n) throw std::domain_error("krawtchouk domain");
  // Exact binomials in double (arguments stay small in this library).
  auto choose = [](int a, int b) -> double {
    if (b < 0 || b > a) return 0.0;
    double v = 1.0;
    for (int i = 0; i < b; ++i) v = v * (a - i) / (i + 1);
    return std::round(v);
  };
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double term = choose(x, j) * choose(n - x, k - j);
    acc += (j & 1) ? -term : term;
  }
  return acc;
}

BallPropositionResult ball_proposition(int n, int r1, int r2) {
  if (r1 < 0 || r2 < 0 || r1 > n || r2 > n) throw std::domain_error("radii outside [0, n]");
  BallPropositionResult res;
  if (r1 + r2 >= n) {
    res.intersects = true;
    res.cos_value = 1.0;
    // Subcube indicator 1{x_j = 0 for j >= r1} lies in V_S and, after the
    // transform, in V_Sigma; verify both support facts exactly.
    std::vector<double> v(domain_size(n), 0.0);
    for (std::size_t x = 0; x < (std::size_t{1} << r1); ++x) v[x] = 1.0;
    const CubeFunction f = make_cube_function(n, std::move(v));
    bool ok = true;
    for (std::size_t x = 0; x < f.values.size(); ++x)
      if (f.values[x] != 0.0 && popcount32(static_cast<std::uint32_t>(x)) > r1) ok = false;
    const Spectrum s = wht(f);
    for (std::size_t w = 0; w < s.coeffs.size(); ++w)
      if (s.coeffs[w] != 0.0 && popcount32(static_cast<std::uint32_t>(w)) > r2) ok = false;
    res.witness_ok = ok;
    return res;
  }
  const AngleReport rep = cos_angle(ball_subset(r1), ball_subset(r2), n);
  res.cos_value = rep.cos_angle;
  return res;
}

BallEigen ball_eigen(int n, int r) {
  if (r < 0 || r > n) throw std::domain_error("ball radius outside [0, n]");
  BallEigen out;
  if (r == 0) {
    out.lambda = 0.0;
    out.profile = {1.0};
    return out;
  }
  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(r + 1, r + 1);
  for (int j = 0; j < r; ++j) {
    const double off = std::sqrt(static_cast<double>(j + 1) * static_cast<double>(n - j));
    tri(j, j + 1) = off;
    tri(j + 1, j) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
  out.lambda = es.eigenvalues()(r);
  Eigen::VectorXd psi = es.eigenvectors().col(r);
  if (psi.sum() < 0.0) psi = -psi;
  // Convert the symmetrized coordinates back to function values per level:
  // phi_j = psi_j / sqrt(C(n,j)).
  out.profile.resize(r + 1);
  for (int j = 0; j <= r; ++j)
    out.profile[j] = psi(j) * std::exp(-0.5 * log_choose(n, j));
  return out;
}

double hirschmann_slack(const CubeFunction& f) {
  double sum_sq = 0.0;
  for (double v : f.values) sum_sq += v * v;
  if (sum_sq == 0.0) throw std::domain_error("hirschmann_slack of the zero function");
  CubeFunction f2 = f;
  for (double& v : f2.values) v *= v;
  Spectrum s = wht(f);
  CubeFunction fhat2{f.n, std::move(s.coeffs)};
  for (double& v : fhat2.values) v *= v;
  return f.n * kLn2 - entropy(f2) / mean(f2) - entropy(fhat2) / mean(fhat2);
}

double cardinality_bound(double e1, double e2, int n) {
  if (!(e1 > 0.0 && e2 > 0.0 && e1 + e2 < kLn2))
    throw std::domain_error("cardinality_bound requires E1, E2 > 0 with E1 + E2 < ln2");
  const double delta = kLn2 - e1 - e2;
  const double bound = 1.0 - (delta - kLn2 / n) / (kLn2 - std::max(e1, e2));
  return std::min(bound, 1.0);  // a fraction of the spectrum never exceeds 1
}

double fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_slope needs >= 2 points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) { mx += xs[i]; my += ys[i]; }
  mx /= xs.size();
  my /= ys.size();
  double cov = 0.0, var = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cov += (xs[i] - mx) * (ys[i] - my);
    var += (xs[i] - mx) * (xs[i] - mx);
  }
  return cov / var;
}

UncertSweepReport uncert_sweep(std::span<const int> ns, double rho1, double rho2,
                               int trials, std::uint64_t seed) {
  if (ns.empty() || trials < 1) throw std::invalid_argument("uncert_sweep needs ns and trials");
  UncertSweepReport rep;
  rep.ns.assign(ns.begin(), ns.end());
  // ODE curve for the analytic bound is n-independent: p0 = 2,
  // rho0 = (ln2 - h(rho1))/2. At rho1 = 0 that hits the single-point
  // boundary; a hair smaller rho0 still satisfies the norm hypothesis and
  // only weakens the bound.
  const double rho0 =
      std::min(0.5 * (kLn2 - binary_entropy(rho1)), 0.5 * kLn2 * (1.0 - 1e-9));
  const std::vector<double> tgrid = step_grid(0.0, 3.0, 0.01);
  const HCCurve curve = hc_ode(2.0, rho0, tgrid);

  for (std::size_t ni = 0; ni < rep.ns.size(); ++ni) {
    const int n = rep.ns[ni];
    const int r = static_cast<int>(std::floor(rho2 * n));
    const auto support_size = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(std::exp(n * binary_entropy(rho1)))));
    double max_ratio = 0.0, sum_ratio = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
      Rng rng(trial_seed(seed, (static_cast<std::uint64_t>(ni) << 32) | static_cast<std::uint32_t>(trial)));
      const auto support = random_support(rng, n, support_size);
      const CubeFunction f = random_on_support(rng, n, support);
      const Spectrum s = wht(f);
      double low = 0.0, total = 0.0;
      for (std::size_t w = 0; w < s.coeffs.size(); ++w) {
        const double sq = s.coeffs[w] * s.coeffs[w];
        total += sq;
        if (popcount32(static_cast<std::uint32_t>(w)) <= r) low += sq;
      }
      const double ratio = std::sqrt(low / total);
      max_ratio = std::max(max_ratio, ratio);
      sum_ratio += ratio;
    }
    rep.max_ratio.push_back(max_ratio);
    rep.mean_ratio.push_back(sum_ratio / trials);

    // Band bound: sum over a <= r of min_t e^{a t - n(ln2 - h(rho1))(1/2 - 1/p(t))}.
    double band = 0.0;
    const double rate = n * (kLn2 - binary_entropy(rho1));
    for (int a = 0; a <= r; ++a) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < curve.ts.size(); ++i) {
        const double e = a * curve.ts[i] - rate * (0.5 - 1.0 / curve.ps[i]);
        best = std::min(best, std::exp(e));
      }
      band += best;
    }
    rep.analytic_bound.push_back(band);
  }

  if (rep.ns.size() >= 2) {
    std::vector<double> xs(rep.ns.begin(), rep.ns.end());
    std::vector<double> ys;
    ys.reserve(rep.max_ratio.size());
    for (double v : rep.max_ratio) ys.push_back(std::log(v));
    rep.fit_slope = fit_slope(xs, ys);
  }
  return rep;
}

}  // namespace hcube
