#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Dense real-valued functions on the Boolean cube {0,1}^n under the uniform
// probability measure, together with the basic calculus used everywhere else
// in this library: Walsh transform, Lp norms, entropy functional, Dirichlet
// form of the continuous-time random walk, and the heat semigroup T_t.
//
// Index convention (fixed across the whole repository, including all file
// formats): bit j of the integer index is coordinate x_j, little-endian.
//
// Fourier convention: the forward transform is the plain counting sum
//   fhat(w) = sum_x (-1)^{<w,x>} f(x),
// with no 2^{-n} factor, so Parseval reads sum_w fhat^2 = 2^n sum_x f^2.

namespace hcube {

// Dense storage of 2^n doubles caps the dimension.
inline constexpr int kMaxDimension = 24;

struct CubeFunction {
  int n = 0;
  std::vector<double> values;
};

struct Spectrum {
  int n = 0;
  std::vector<double> coeffs;
};

std::size_t domain_size(int n);

// Validating constructor: checks the dimension guard, the 2^n length and
// that every entry is finite.
CubeFunction make_cube_function(int n, std::vector<double> values);
void validate(const CubeFunction& f);

CubeFunction constant_function(int n, double c);
// Character chi_w(x) = (-1)^{<w,x>}.
CubeFunction character(int n, std::uint32_t w);
CubeFunction point_mass(int n, std::uint32_t x);

// In-place Walsh-Hadamard butterfly over 2^n entries, O(n 2^n).
void fwht_inplace(std::span<double> data);

Spectrum wht(const CubeFunction& f);
CubeFunction iwht(const Spectrum& s);

double mean(const CubeFunction& f);
// ||f||_p = E^{1/p}[|f|^p] for p in (0, inf]; p = inf returns max |f|.
double lp_norm(const CubeFunction& f, double p);
// ln ||f||_p, evaluated in log space; stable for large p and tiny values.
double log_lp_norm(const CubeFunction& f, double p);

// Ent(f) = E[f ln(f / E[f])], with the convention 0 ln 0 = 0.
// Requires f >= 0 and f not identically zero.
double entropy(const CubeFunction& f);

// Dirichlet form E_n(f,g) = -(1/2)(Lap f, g), Lap f(x) = sum_{y~x}(f(y)-f(x)).
double dirichlet(const CubeFunction& f, const CubeFunction& g);

// Heat semigroup: multiplies mode w by e^{-t|w|}. Requires t >= 0.
CubeFunction heat(const CubeFunction& f, double t);

// Pointwise power f^r, r > 0 (zeros allowed).
CubeFunction pointwise_pow(const CubeFunction& f, double r);

// Ent(f^r) / E[f^r].
double entropy_ratio(const CubeFunction& f, double r);

std::size_t support_count(const CubeFunction& f);
// (1/n) ln(2^n / |supp f|); +inf for the zero function.
double log_support_rate(const CubeFunction& f);

}  // namespace hcube
