#include "hcube/cube_function.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcube {

std::size_t domain_size(int n) {
  if (n < 0 || n > kMaxDimension)
    throw std::invalid_argument("dimension out of range [0, 24]: " + std::to_string(n));
  return std::size_t{1} << n;
}

void validate(const CubeFunction& f) {
  if (f.values.size() != domain_size(f.n))
    throw std::invalid_argument("values length != 2^n");
  for (double v : f.values)
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite entry");
}

CubeFunction make_cube_function(int n, std::vector<double> values) {
  CubeFunction f{n, std::move(values)};
  validate(f);
  return f;
}

CubeFunction constant_function(int n, double c) {
  return make_cube_function(n, std::vector<double>(domain_size(n), c));
}

CubeFunction character(int n, std::uint32_t w) {
  std::vector<double> v(domain_size(n));
  for (std::size_t x = 0; x < v.size(); ++x)
    v[x] = (std::popcount(static_cast<std::uint32_t>(x) & w) & 1) ? -1.0 : 1.0;
  return make_cube_function(n, std::move(v));
}

CubeFunction point_mass(int n, std::uint32_t x) {
  std::vector<double> v(domain_size(n), 0.0);
  v.at(x) = 1.0;
  return make_cube_function(n, std::move(v));
}

void fwht_inplace(std::span<double> data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        double a = data[i];
        double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

Spectrum wht(const CubeFunction& f) {
  validate(f);
  Spectrum s{f.n, f.values};
  fwht_inplace(s.coeffs);
  return s;
}

CubeFunction iwht(const Spectrum& s) {
  if (s.coeffs.size() != domain_size(s.n))
    throw std::invalid_argument("coeffs length != 2^n");
  CubeFunction f{s.n, s.coeffs};
  fwht_inplace(f.values);
  const double scale = 1.0 / static_cast<double>(f.values.size());
  for (double& v : f.values) v *= scale;
  return f;
}

double mean(const CubeFunction& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v;
  return sum / static_cast<double>(f.values.size());
}

double log_lp_norm(const CubeFunction& f, double p) {
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return std::log(m);
  }
  if (!(p > 0)) throw std::invalid_argument("lp_norm requires p > 0");
  // log-sum-exp over p * ln|f|; exact zeros contribute nothing.
  double lmax = -std::numeric_limits<double>::infinity();
  for (double v : f.values) {
    if (v == 0.0) continue;
    lmax = std::max(lmax, p * std::log(std::abs(v)));
  }
  if (std::isinf(lmax)) return -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (double v : f.values) {
    if (v == 0.0) continue;
    acc += std::exp(p * std::log(std::abs(v)) - lmax);
  }
  const double ln_mean = lmax + std::log(acc) - f.n * std::numbers::ln2;
  return ln_mean / p;
}

double lp_norm(const CubeFunction& f, double p) {
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p > 0)) throw std::invalid_argument("lp_norm requires p > 0");
  if (p > 50.0) return std::exp(log_lp_norm(f, p));
  double acc = 0.0;
  for (double v : f.values) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(f.values.size()), 1.0 / p);
}

double entropy(const CubeFunction& f) {
  double sum = 0.0;
  double flnf = 0.0;
  for (double v : f.values) {
    if (v < 0.0) throw std::domain_error("entropy requires f >= 0");
    sum += v;
    if (v > 0.0) flnf += v * std::log(v);
  }
  if (sum == 0.0) throw std::domain_error("entropy of the zero function");
  const double inv = 1.0 / static_cast<double>(f.values.size());
  const double m = sum * inv;
  return flnf * inv - m * std::log(m);
}

double dirichlet(const CubeFunction& f, const CubeFunction& g) {
  if (f.n != g.n) throw std::invalid_argument("dirichlet: dimension mismatch");
  const std::size_t size = f.values.size();
  double acc = 0.0;
  for (std::size_t x = 0; x < size; ++x) {
    double lap = 0.0;
    for (int j = 0; j < f.n; ++j) lap += f.values[x ^ (std::size_t{1} << j)];
    lap -= f.n * f.values[x];
    acc += lap * g.values[x];
  }
  return -0.5 * acc / static_cast<double>(size);
}

CubeFunction heat(const CubeFunction& f, double t) {
  if (!(t >= 0.0)) throw std::domain_error("heat requires t >= 0");
  if (t == 0.0) return f;  // keep exact zeros exact
  Spectrum s = wht(f);
  for (std::size_t w = 0; w < s.coeffs.size(); ++w)
    s.coeffs[w] *= std::exp(-t * std::popcount(static_cast<std::uint32_t>(w)));
  return iwht(s);
}

CubeFunction pointwise_pow(const CubeFunction& f, double r) {
  CubeFunction g = f;
  for (double& v : g.values) v = std::pow(v, r);
  return g;
}

double entropy_ratio(const CubeFunction& f, double r) {
  if (!(r > 0)) throw std::invalid_argument("entropy_ratio requires r > 0");
  CubeFunction fr = pointwise_pow(f, r);
  return entropy(fr) / mean(fr);
}

std::size_t support_count(const CubeFunction& f) {
  return static_cast<std::size_t>(
      std::count_if(f.values.begin(), f.values.end(),
                    [](double v) { return v != 0.0; }));
}

double log_support_rate(const CubeFunction& f) {
  const std::size_t cnt = support_count(f);
  if (cnt == 0) return std::numeric_limits<double>::infinity();
  if (f.n == 0) return 0.0;
  return (f.n * std::numbers::ln2 - std::log(static_cast<double>(cnt))) / f.n;
}

}  // namespace hcube
