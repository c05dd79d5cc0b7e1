#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

// Bit-packed GF(2) linear algebra: matrices with rows packed into 64-bit
// words, Gaussian elimination, rank, reduced row echelon form, nullspace,
// and solving x M = c against a full-rank row basis.

namespace hcube {

using Gf2Word = std::uint64_t;
inline constexpr std::size_t kGf2WordBits = 64;

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);
  // Rows given as bit masks (bit j = column j); cols <= 64.
  static Gf2Matrix from_row_masks(std::size_t cols, std::span<const std::uint64_t> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  std::span<const Gf2Word> row(std::size_t r) const;
  std::span<Gf2Word> row(std::size_t r);
  // Mask of the first min(cols, 64) bits of a row.
  std::uint64_t row_mask(std::size_t r) const;

  void xor_row_into(std::size_t src, std::size_t dst);
  void swap_rows(std::size_t a, std::size_t b);
  void append_row(std::span<const Gf2Word> words);

  bool operator==(const Gf2Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<Gf2Word> data_;
};

int weight(std::span<const Gf2Word> words);

struct RrefResult {
  Gf2Matrix mat;                   // zero rows dropped
  std::vector<std::size_t> pivots; // pivot column per surviving row
};
RrefResult rref(const Gf2Matrix& m);
std::size_t rank(const Gf2Matrix& m);

// Basis (as rows) of {x : M x = 0}; rank(M) + rows(nullspace) = cols(M),
// and every returned row is orthogonal to every row of M.
Gf2Matrix nullspace(const Gf2Matrix& m);

// Rows of a stacked on top of rows of b (same column count).
Gf2Matrix stack(const Gf2Matrix& a, const Gf2Matrix& b);

// Row-space equality via canonical RREF.
bool same_row_space(const Gf2Matrix& a, const Gf2Matrix& b);

// Codeword x M for a message mask x over the rows of M (requires rows <= 64).
std::vector<Gf2Word> encode(const Gf2Matrix& m, std::uint64_t x);

// Solver for x M = c with M of full row rank (throws otherwise); solve()
// returns the unique coefficient mask, or nullopt when c is outside the
// row space.
class Gf2Solver {
 public:
  explicit Gf2Solver(const Gf2Matrix& m);
  std::optional<std::uint64_t> solve(std::span<const Gf2Word> codeword) const;

 private:
  Gf2Matrix reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> coeffs_;  // row-operation bookkeeping
};

// Hamming weight of the coefficient vector representing codeword c in the
// row basis M; throws if c is not in the row space or M is rank-deficient.
int basis_length(const Gf2Matrix& m, std::span<const Gf2Word> codeword);

}  // namespace hcube
