#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "hcube/cube_function.hpp"
#include "hcube/gf2.hpp"
#include "hcube/rng.hpp"

// Seeded generators shared by the verification suites and the tests.

namespace hcube {

// Strictly positive values exp(u), u uniform in [-2, 2].
inline CubeFunction random_positive_function(Rng& rng, int n) {
  std::vector<double> v(domain_size(n));
  for (double& x : v) x = std::exp(rng.uniform(-2.0, 2.0));
  return make_cube_function(n, std::move(v));
}

// Nonnegative with roughly 20% exact zeros.
inline CubeFunction random_nonneg_function(Rng& rng, int n) {
  std::vector<double> v(domain_size(n));
  for (double& x : v) {
    double u = rng.uniform();
    x = u < 0.2 ? 0.0 : rng.uniform(0.0, 2.0);
  }
  return make_cube_function(n, std::move(v));
}

// Signed values uniform in [-1, 1).
inline CubeFunction random_signed_function(Rng& rng, int n) {
  std::vector<double> v(domain_size(n));
  for (double& x : v) x = rng.signed_unit();
  return make_cube_function(n, std::move(v));
}

// Distinct masks drawn by partial Fisher-Yates over [0, 2^n).
inline std::vector<std::uint32_t> random_support(Rng& rng, int n, std::size_t size) {
  const std::size_t full = domain_size(n);
  if (size > full) size = full;
  std::vector<std::uint32_t> pool(full);
  for (std::size_t i = 0; i < full; ++i) pool[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < size; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(full - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return pool;
}

// Indicator of a random support of size floor(2^{nR}). Rounding down keeps
// |S| <= 2^{nR}, so the realized concentration parameter never falls below
// the one computed from R.
inline CubeFunction random_indicator(Rng& rng, int n, double rate_bits) {
  std::size_t size = static_cast<std::size_t>(std::exp2(rate_bits * n));
  if (size == 0) size = 1;
  std::vector<double> v(domain_size(n), 0.0);
  for (std::uint32_t m : random_support(rng, n, size)) v[m] = 1.0;
  return make_cube_function(n, std::move(v));
}

// f with the given support carrying signed uniform values.
inline CubeFunction random_on_support(Rng& rng, int n,
                                      const std::vector<std::uint32_t>& support) {
  std::vector<double> v(domain_size(n), 0.0);
  for (std::uint32_t m : support) {
    double x = 0.0;
    while (x == 0.0) x = rng.signed_unit();
    v[m] = x;
  }
  return make_cube_function(n, std::move(v));
}

// Uniform random k x n matrix; full_rank forces rank k by redrawing.
inline Gf2Matrix random_gf2_matrix(Rng& rng, std::size_t k, std::size_t n,
                                   bool full_rank) {
  for (;;) {
    Gf2Matrix m(k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (rng.next_u64() & 1) m.set(r, c, true);
    if (!full_rank || rank(m) == k) return m;
  }
}

}  // namespace hcube
