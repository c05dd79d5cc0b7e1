#include "hcube/lsi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcube {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Below this z = 1 - 2y the closed forms for C and C' cancel badly and the
// Taylor series around y = 1/2 is more accurate.
constexpr double kSeriesSwitch = 1e-2;

double require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error(std::string(what) + " outside [0,1]");
  return v;
}

}  // namespace

double binary_entropy(double y) {
  require_unit(y, "binary_entropy argument");
  double acc = 0.0;
  if (y > 0.0) acc -= y * std::log(y);
  if (y < 1.0) acc -= (1.0 - y) * std::log(1.0 - y);
  return acc;
}

double binary_entropy_inv(double z) {
  if (!(z >= 0.0 && z <= kLn2 + 1e-12))
    throw std::domain_error("binary_entropy_inv argument outside [0, ln2]");
  if (z <= 0.0) return 0.0;
  if (z >= kLn2) return 0.5;
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 100; ++i) {
    double mid = 0.5 * (lo + hi);
    (binary_entropy(mid) < z ? lo : hi) = mid;
    if (hi - lo < 1e-17) break;
  }
  return 0.5 * (lo + hi);
}

double binary_conv(double a, double b) {
  require_unit(a, "binary_conv a");
  require_unit(b, "binary_conv b");
  return (1.0 - a) * b + (1.0 - b) * a;
}

double b1(double x) {
  if (!(x >= 0.0 && x <= kLn2)) throw std::domain_error("b1 argument outside [0, ln2]");
  if (x == kLn2) return kInf;
  const double y = binary_entropy_inv(kLn2 - x);
  if (y >= 0.5) return 0.0;
  if (y <= 0.0) return kInf;
  return (0.5 - y) * std::log((1.0 - y) / y);
}

double bp(double p, double x) {
  if (p == 0.0 || p == 1.0) throw std::invalid_argument("bp requires p outside {0,1}");
  if (!(x >= 0.0 && x <= kLn2)) throw std::domain_error("bp argument outside [0, ln2]");
  const double y = binary_entropy_inv(kLn2 - x);
  if (y >= 0.5) return 0.0;
  if (y <= 0.0) {
    if (p > 1.0) return 0.5;  // both powers of y vanish
    throw std::domain_error("bp diverges at x = ln2 for p < 1");
  }
  if (p == 2.0) {
    // both power terms collapse to sqrt(y(1-y)); the rewrite below avoids the
    // 1 - sqrt(1-z^2) cancellation near y = 1/2
    const double z = 1.0 - 2.0 * y;
    const double z2 = z * z;
    return 0.5 * z2 / (1.0 + std::sqrt(1.0 - z2));
  }
  const double a = 1.0 / p;
  const double t1 = std::pow(y, a) * std::pow(1.0 - y, 1.0 - a);
  const double t2 = std::pow(y, 1.0 - a) * std::pow(1.0 - y, a);
  const double sgn = p > 1.0 ? 1.0 : -1.0;
  return 0.5 * sgn * (1.0 - t1 - t2);
}

double cfun(double x) {
  if (!(x >= 0.0 && x <= kLn2)) throw std::domain_error("C argument outside [0, ln2]");
  if (x == 0.0) return 2.0;
  const double y = binary_entropy_inv(kLn2 - x);
  const double z = 1.0 - 2.0 * y;
  if (z < kSeriesSwitch) {
    const double z2 = z * z;
    return 2.0 + z2 / 6.0 + 4.0 * z2 * z2 / 45.0;
  }
  return (2.0 - 4.0 * std::sqrt(y * (1.0 - y))) / x;
}

double cprime(double x) {
  if (!(x >= 0.0 && x <= kLn2)) throw std::domain_error("C' argument outside [0, ln2]");
  if (x == kLn2) return kInf;  // endpoint derivative diverges
  const double y = binary_entropy_inv(kLn2 - x);
  const double z = 1.0 - 2.0 * y;
  if (z < kSeriesSwitch) {
    const double z2 = z * z;
    return (1.0 / 3.0 + 16.0 * z2 / 45.0) / (1.0 + z2 / 3.0 + z2 * z2 / 5.0);
  }
  // dC/dx = (N'(y) - C x'(y)) / (x x'(y)) with N = 2 - 4 sqrt(y(1-y)),
  // x'(y) = ln(y/(1-y)).
  const double root = std::sqrt(y * (1.0 - y));
  const double c = (2.0 - 4.0 * root) / x;
  const double nprime = -2.0 * z / root;
  const double xprime = std::log(y / (1.0 - y));
  return (nprime - c * xprime) / (x * xprime);
}

double alpha_p(double p) { return 2.0 * (p - 1.0) / (p * p); }

double plsi_margin(const CubeFunction& f, double p) {
  if (p == 0.0) throw std::invalid_argument("plsi_margin requires p != 0");
  if (f.n < 1) throw std::invalid_argument("plsi_margin requires n >= 1");
  if (p <= 1.0) {
    for (double v : f.values)
      if (!(v > 0.0)) throw std::domain_error("p <= 1 requires strictly positive f");
  } else {
    for (double v : f.values)
      if (v < 0.0) throw std::domain_error("plsi_margin requires f >= 0");
  }
  const double n = f.n;
  if (p == 1.0) {
    CubeFunction lnf = f;
    for (double& v : lnf.values) v = std::log(v);
    const double m = mean(f);
    const double lhs = dirichlet(f, lnf) / (n * m);
    const double arg = std::clamp(entropy(f) / (n * m), 0.0, kLn2);
    return lhs - b1(arg);
  }
  CubeFunction fp = pointwise_pow(f, p);
  CubeFunction fpm1 = pointwise_pow(f, p - 1.0);
  const double m = mean(fp);
  const double sgn = p > 1.0 ? 1.0 : -1.0;
  const double lhs = sgn * dirichlet(f, fpm1) / (n * m);
  double arg = std::clamp(entropy(fp) / (n * m), 0.0, kLn2);
  if (p < 1.0) arg = std::min(arg, kLn2 - 1e-12);  // bp pole at ln2
  return lhs - bp(p, arg);
}

SvCompareReport sv_compare(double p, std::span<const double> xs) {
  if (p == 0.0 || p == 1.0) throw std::invalid_argument("sv_compare requires p outside {0,1}");
  SvCompareReport rep;
  rep.p = p;
  rep.points = xs.size();
  rep.min_slack_b2 = kInf;
  const double c2 = 4.0 * std::abs(p - 1.0) / (p * p);
  const double c1 = (1.0 - p) / (p * p);
  if (p < 1.0) rep.min_slack_b1 = kInf;
  for (double x : xs) {
    const double v = bp(p, x);
    rep.min_slack_b2 = std::min(rep.min_slack_b2, v - c2 * bp(2.0, x));
    if (p < 1.0)
      rep.min_slack_b1 = std::min(*rep.min_slack_b1, v - c1 * b1(x));
  }
  return rep;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {lo};
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  xs.back() = hi;
  return xs;
}

std::vector<double> step_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) throw std::invalid_argument("bad grid");
  std::vector<double> xs;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) xs.push_back(start + step * static_cast<double>(i));
  return xs;
}

}  // namespace hcube
