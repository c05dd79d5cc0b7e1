#include "hcube/coding.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hcube/lsi.hpp"
#include "hcube/uncertainty.hpp"

namespace hcube {

namespace {

constexpr double kLn2 = std::numbers::ln2;

void check_enumeration(const Gf2Matrix& m, int cap) {
  if (m.rows() == 0) throw std::invalid_argument("empty generator");
  if (m.rows() > static_cast<std::size_t>(cap))
    throw std::invalid_argument("message dimension above the enumeration guard");
}

// Walks all nonzero messages in Gray-code order, keeping the running
// codeword; visit(message, codeword_words).
template <typename Visit>
void for_each_nonzero_message(const Gf2Matrix& m, Visit visit) {
  const std::size_t k = m.rows();
  std::vector<Gf2Word> cw(m.words_per_row(), 0);
  std::uint32_t msg = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
    const int flip = std::countr_zero(i);
    msg ^= std::uint32_t{1} << flip;
    const auto row = m.row(static_cast<std::size_t>(flip));
    for (std::size_t w = 0; w < cw.size(); ++w) cw[w] ^= row[w];
    visit(msg, std::span<const Gf2Word>(cw));
  }
}

}  // namespace

std::vector<int> min_image_weight_by_message_weight(const Gf2Matrix& m) {
  check_enumeration(m, kMaxMessageBits);
  std::vector<int> best(m.rows() + 1, INT_MAX);
  best[0] = 0;
  for_each_nonzero_message(m, [&](std::uint32_t msg, std::span<const Gf2Word> cw) {
    const int win = std::popcount(msg);
    best[win] = std::min(best[win], weight(cw));
  });
  return best;
}

std::vector<int> d_r_table(const Gf2Matrix& m) {
  const auto best = min_image_weight_by_message_weight(m);
  std::vector<int> table(m.rows() + 1, INT_MAX);
  for (int r = static_cast<int>(m.rows()); r >= 1; --r)
    table[r] = std::min(best[r], r + 1 <= static_cast<int>(m.rows()) ? table[r + 1] : INT_MAX);
  return table;
}

int d_r(const Gf2Matrix& m, int r) {
  if (r < 1 || r > static_cast<int>(m.rows()))
    throw std::invalid_argument("d_r requires 1 <= r <= k");
  return d_r_table(m)[r];
}

std::vector<std::pair<int, int>> pareto_front(const Gf2Matrix& m) {
  const auto best = min_image_weight_by_message_weight(m);
  std::vector<std::pair<int, int>> front;
  int seen = INT_MAX;
  for (int w = static_cast<int>(m.rows()); w >= 1; --w) {
    if (best[w] < seen) {
      front.emplace_back(w, best[w]);
      seen = best[w];
    }
  }
  std::reverse(front.begin(), front.end());
  return front;
}

double delta_lp1(double rate_bits) {
  if (!(rate_bits > 0.0 && rate_bits <= 1.0))
    throw std::domain_error("delta_lp1 requires a rate in (0, 1]");
  const double rho = binary_entropy_inv(rate_bits * kLn2);
  return 0.5 - std::sqrt(rho * (1.0 - rho));
}

WitnessResult map_witness_search(const Gf2Matrix& m, double rprime, double slack) {
  check_enumeration(m, kMaxMessageBits);
  const double k = static_cast<double>(m.rows());
  const double n = static_cast<double>(m.cols());
  const double rate = k / n;
  if (!(rprime > 0.0 && rprime < rate))
    throw std::domain_error("requires 0 < R' < R = k/n");
  WitnessResult res;
  res.threshold_out = delta_lp1(rprime) + slack;
  res.threshold_in = delta_lp1(rprime / rate) - slack;
  double best_score = -std::numeric_limits<double>::infinity();
  for_each_nonzero_message(m, [&](std::uint32_t msg, std::span<const Gf2Word> cw) {
    const double m_in = static_cast<double>(std::popcount(msg)) / k - res.threshold_in;
    const double m_out = res.threshold_out - static_cast<double>(weight(cw)) / n;
    const double score = std::min(m_in, m_out);
    if (score > best_score) {
      best_score = score;
      res.x = msg;
      res.x_weight = std::popcount(msg);
      res.image_weight = weight(cw);
      res.margin_in = m_in;
      res.margin_out = m_out;
    }
  });
  res.found = best_score >= 0.0;
  return res;
}

LemmaRatioResult lemma_ratio(const CubeFunction& f, const Gf2Matrix& m, int r) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  if (f.n != static_cast<int>(n)) throw std::invalid_argument("dimension mismatch");
  if (n > 64) throw std::invalid_argument("lemma_ratio supports n <= 64 columns");
  check_enumeration(m, kMaxMessageBits);
  if (rank(m) != k) throw std::invalid_argument("lemma_ratio requires a full-rank basis");
  if (r < 0 || r > static_cast<int>(k)) throw std::invalid_argument("r outside [0, k]");

  LemmaRatioResult res;

  // Direct route: restrict the length-n spectrum to the code; the basis
  // length of alpha M is |alpha| by full rank.
  const Spectrum spec = wht(f);
  {
    double num = spec.coeffs[0] * spec.coeffs[0];
    double den = num;
    for_each_nonzero_message(m, [&](std::uint32_t alpha, std::span<const Gf2Word> cw) {
      const double c = spec.coeffs[static_cast<std::size_t>(cw[0])];
      const double sq = c * c;
      den += sq;
      if (std::popcount(alpha) <= r) num += sq;
    });
    if (den == 0.0) throw std::domain_error("spectrum vanishes on the code");
    res.ratio_direct = num / den;
  }

  // Reduced route: g(x) = |C| (f conv 1_{C_perp})(y_x) on F_2^k, built in the
  // primal domain from coset sums, then transformed on the small cube.
  {
    const Gf2Matrix cperp = nullspace(m);
    std::vector<std::uint64_t> coset(std::size_t{1} << cperp.rows());
    coset[0] = 0;
    // enumerate C_perp via Gray order
    {
      std::uint64_t v = 0;
      for (std::uint64_t i = 1; i < (std::uint64_t{1} << cperp.rows()); ++i) {
        v ^= cperp.row_mask(static_cast<std::size_t>(std::countr_zero(i)));
        coset[i] = v;
      }
    }
    // Right inverse: coset representatives y_x with M y = x, supported on the
    // pivot columns of M. Built from the inverse of the pivot submatrix.
    const RrefResult rr = rref(m);
    std::vector<std::uint64_t> right_inv(k, 0);
    {
      const std::vector<std::size_t>& piv = rr.pivots;
      Gf2Matrix sub(k, k);
      for (std::size_t rrow = 0; rrow < k; ++rrow)
        for (std::size_t c = 0; c < k; ++c)
          if (m.get(rrow, piv[c])) sub.set(rrow, c, true);
      // Invert sub by augmentation.
      Gf2Matrix work = sub;
      Gf2Matrix inv = Gf2Matrix::identity(k);
      for (std::size_t col = 0, row = 0; col < k; ++col) {
        std::size_t p = row;
        while (p < k && !work.get(p, col)) ++p;
        if (p == k) throw std::logic_error("pivot submatrix singular");
        work.swap_rows(row, p);
        inv.swap_rows(row, p);
        for (std::size_t rr2 = 0; rr2 < k; ++rr2) {
          if (rr2 != row && work.get(rr2, col)) {
            work.xor_row_into(row, rr2);
            inv.xor_row_into(row, rr2);
          }
        }
        ++row;
      }
      // Column i of inv gives the pivot-coordinates of y with M y = e_i.
      for (std::size_t i = 0; i < k; ++i) {
        std::uint64_t y = 0;
        for (std::size_t j = 0; j < k; ++j)
          if (inv.get(j, i)) y ^= (std::uint64_t{1} << piv[j]);
        right_inv[i] = y;
      }
    }
    const double scale = std::exp2(static_cast<double>(k) - static_cast<double>(n));
    std::vector<double> g(std::size_t{1} << k, 0.0);
    for (std::size_t x = 0; x < g.size(); ++x) {
      std::uint64_t y = 0;
      std::uint64_t bits = x;
      while (bits) {
        const int b = std::countr_zero(bits);
        bits &= bits - 1;
        y ^= right_inv[static_cast<std::size_t>(b)];
      }
      double acc = 0.0;
      for (std::uint64_t c : coset) acc += f.values[static_cast<std::size_t>(y ^ c)];
      g[x] = scale * acc;  // |C| 2^{-n} sum over the coset = |C| (f conv 1)(y)
    }
    fwht_inplace(g);
    double num = 0.0, den = 0.0;
    for (std::size_t alpha = 0; alpha < g.size(); ++alpha) {
      const double sq = g[alpha] * g[alpha];
      den += sq;
      const int pc = std::popcount(alpha);
      if (pc <= r) num += sq;
    }
    res.ratio_reduced = num / den;
  }

  // Hypothesis bookkeeping, base-2 rates per the subspace statement.
  const double support = static_cast<double>(support_count(f));
  res.hyp_support = static_cast<double>(k) >= std::log2(std::max(support, 1.0));
  const double h1_bits = std::clamp(std::log2(std::max(support, 1.0)) / static_cast<double>(k), 0.0, 1.0);
  double mass = 0.0;
  for (int j = 0; j <= r; ++j) {
    double binom = 1.0;
    for (int i = 0; i < j; ++i) binom = binom * (static_cast<double>(k) - i) / (i + 1);
    mass += binom;
  }
  const double h2_bits = std::clamp(std::log2(mass) / static_cast<double>(k), 0.0, 1.0);
  res.rho1 = binary_entropy_inv(h1_bits * kLn2);
  res.rho2 = binary_entropy_inv(h2_bits * kLn2);
  res.bc_margin = ball_condition(res.rho1, res.rho2).margin_sq;
  res.hyp_condition = res.bc_margin > 0.0;
  return res;
}

Method1Report code_method1_check(const Gf2Matrix& m, double rprime, int r_override) {
  const std::size_t k = m.rows();
  const std::size_t n = m.cols();
  check_enumeration(m, kMaxSpectralBits);
  if (n > 24) throw std::invalid_argument("code_method1_check supports n <= 24");
  const double rate = static_cast<double>(k) / static_cast<double>(n);
  if (!(rprime > 0.0 && rprime < rate))
    throw std::domain_error("requires 0 < R' < R = k/n");

  Method1Report rep;
  rep.r_ball = static_cast<int>(std::floor(binary_entropy_inv(rprime * kLn2) * static_cast<double>(n)));
  rep.r_ball = std::max(rep.r_ball, 1);
  rep.r = r_override >= 0
              ? r_override
              : std::max(1, static_cast<int>(std::floor(delta_lp1(rprime / rate) * static_cast<double>(k))));

  const BallEigen be = ball_eigen(static_cast<int>(n), rep.r_ball);
  rep.lambda_ball = be.lambda;

  // Pushforward of the radial eigenvector along the covering map y -> M y.
  std::vector<std::uint64_t> cols(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    std::uint64_t col = 0;
    for (std::size_t rrow = 0; rrow < k; ++rrow)
      if (m.get(rrow, c)) col |= std::uint64_t{1} << rrow;
    cols[c] = col;
  }
  std::vector<double> hb(std::size_t{1} << k, 0.0);
  const std::size_t full = std::size_t{1} << n;
  for (std::size_t y = 0; y < full; ++y) {
    const int wy = std::popcount(y);
    if (wy > rep.r_ball) continue;
    std::uint64_t z = 0;
    std::uint64_t bits = y;
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      z ^= cols[static_cast<std::size_t>(b)];
    }
    hb[static_cast<std::size_t>(z)] += be.profile[static_cast<std::size_t>(wy)];
  }

  // Spectral data of the Cayley graph: eigenvalue n - 2|alpha M| at alpha.
  std::vector<double> lam(std::size_t{1} << k, static_cast<double>(n));
  for_each_nonzero_message(m, [&](std::uint32_t alpha, std::span<const Gf2Word> cw) {
    lam[alpha] = static_cast<double>(n) - 2.0 * weight(cw);
  });

  std::vector<double> hhat = hb;
  fwht_inplace(hhat);
  double total = 0.0, low = 0.0, quad = 0.0, kept = 0.0;
  for (std::size_t alpha = 0; alpha < hhat.size(); ++alpha) {
    const double sq = hhat[alpha] * hhat[alpha];
    total += sq;
    const int pc = std::popcount(alpha);
    if (pc < rep.r) {
      low += sq;
    } else {
      kept += sq;
      quad += lam[alpha] * sq;
    }
  }
  if (total == 0.0) throw std::domain_error("pushforward vanished");
  rep.leakage = low / total;
  rep.rayleigh = kept > 0.0 ? quad / kept : -static_cast<double>(n);
  // r = 0 removes nothing; the spectral maximum is then n - 2 d_0 with d_0 = 0.
  const int dr = rep.r >= 1 ? d_r(m, rep.r) : 0;
  rep.n_minus_2dr = static_cast<double>(n) - 2.0 * dr;
  rep.bound_holds = rep.rayleigh <= rep.n_minus_2dr + 1e-9;
  return rep;
}

}  // namespace hcube
