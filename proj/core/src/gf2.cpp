#include "hcube/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hcube {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_((cols + kGf2WordBits - 1) / kGf2WordBits),
      data_(rows * words_, 0) {}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Matrix Gf2Matrix::from_row_masks(std::size_t cols, std::span<const std::uint64_t> rows) {
  if (cols > kGf2WordBits) throw std::invalid_argument("from_row_masks: cols > 64");
  Gf2Matrix m(rows.size(), cols);
  const std::uint64_t mask = cols == kGf2WordBits ? ~0ULL : ((1ULL << cols) - 1);
  for (std::size_t r = 0; r < rows.size(); ++r) m.data_[r * m.words_] = rows[r] & mask;
  return m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (data_[r * words_ + c / kGf2WordBits] >> (c % kGf2WordBits)) & 1;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  Gf2Word& w = data_[r * words_ + c / kGf2WordBits];
  const Gf2Word bit = Gf2Word{1} << (c % kGf2WordBits);
  w = v ? (w | bit) : (w & ~bit);
}

std::span<const Gf2Word> Gf2Matrix::row(std::size_t r) const {
  return {data_.data() + r * words_, words_};
}

std::span<Gf2Word> Gf2Matrix::row(std::size_t r) {
  return {data_.data() + r * words_, words_};
}

std::uint64_t Gf2Matrix::row_mask(std::size_t r) const {
  return words_ == 0 ? 0 : data_[r * words_];
}

void Gf2Matrix::xor_row_into(std::size_t src, std::size_t dst) {
  for (std::size_t w = 0; w < words_; ++w)
    data_[dst * words_ + w] ^= data_[src * words_ + w];
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t w = 0; w < words_; ++w)
    std::swap(data_[a * words_ + w], data_[b * words_ + w]);
}

void Gf2Matrix::append_row(std::span<const Gf2Word> words) {
  if (words.size() != words_ && !(words_ == 0 && words.empty()))
    throw std::invalid_argument("append_row: word count mismatch");
  data_.insert(data_.end(), words.begin(), words.end());
  ++rows_;
}

int weight(std::span<const Gf2Word> words) {
  int w = 0;
  for (Gf2Word x : words) w += std::popcount(x);
  return w;
}

RrefResult rref(const Gf2Matrix& m) {
  Gf2Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(next_row, pivot);
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (r != next_row && a.get(r, col)) a.xor_row_into(next_row, r);
    pivots.push_back(col);
    ++next_row;
  }
  Gf2Matrix out(0, m.cols());
  for (std::size_t r = 0; r < next_row; ++r) out.append_row(a.row(r));
  return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Gf2Matrix& m) { return rref(m).pivots.size(); }

Gf2Matrix nullspace(const Gf2Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;

  Gf2Matrix kernel(0, n);
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Basis vector: 1 at the free column, and for each pivot row with a 1 in
    // the free column, a compensating 1 at that row's pivot column.
    std::vector<Gf2Word> vec((n + kGf2WordBits - 1) / kGf2WordBits, 0);
    vec[free_col / kGf2WordBits] |= Gf2Word{1} << (free_col % kGf2WordBits);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
      if (rr.mat.get(r, free_col)) {
        const std::size_t pc = rr.pivots[r];
        vec[pc / kGf2WordBits] ^= Gf2Word{1} << (pc % kGf2WordBits);
      }
    }
    kernel.append_row(vec);
  }
  return kernel;
}

Gf2Matrix stack(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("stack: column mismatch");
  Gf2Matrix out(0, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

bool same_row_space(const Gf2Matrix& a, const Gf2Matrix& b) {
  const RrefResult ra = rref(a);
  const RrefResult rb = rref(b);
  return ra.mat == rb.mat;
}

std::vector<Gf2Word> encode(const Gf2Matrix& m, std::uint64_t x) {
  if (m.rows() > 64) throw std::invalid_argument("encode: more than 64 rows");
  std::vector<Gf2Word> cw(m.words_per_row(), 0);
  while (x != 0) {
    const int r = std::countr_zero(x);
    x &= x - 1;
    const auto row = m.row(static_cast<std::size_t>(r));
    for (std::size_t w = 0; w < cw.size(); ++w) cw[w] ^= row[w];
  }
  return cw;
}

Gf2Solver::Gf2Solver(const Gf2Matrix& m) {
  if (m.rows() > 64) throw std::invalid_argument("Gf2Solver: more than 64 rows");
  reduced_ = m;
  coeffs_.assign(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) coeffs_[r] = 1ULL << r;
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < reduced_.cols() && next_row < reduced_.rows(); ++col) {
    std::size_t pivot = next_row;
    while (pivot < reduced_.rows() && !reduced_.get(pivot, col)) ++pivot;
    if (pivot == reduced_.rows()) continue;
    reduced_.swap_rows(next_row, pivot);
    std::swap(coeffs_[next_row], coeffs_[pivot]);
    for (std::size_t r = 0; r < reduced_.rows(); ++r) {
      if (r != next_row && reduced_.get(r, col)) {
        reduced_.xor_row_into(next_row, r);
        coeffs_[r] ^= coeffs_[next_row];
      }
    }
    pivots_.push_back(col);
    ++next_row;
  }
  if (pivots_.size() != m.rows())
    throw std::invalid_argument("Gf2Solver requires a full-row-rank matrix");
}

std::optional<std::uint64_t> Gf2Solver::solve(std::span<const Gf2Word> codeword) const {
  if (codeword.size() != reduced_.words_per_row())
    throw std::invalid_argument("solve: word count mismatch");
  std::vector<Gf2Word> residue(codeword.begin(), codeword.end());
  std::uint64_t x = 0;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::size_t c = pivots_[r];
    if ((residue[c / kGf2WordBits] >> (c % kGf2WordBits)) & 1) {
      const auto row = reduced_.row(r);
      for (std::size_t w = 0; w < residue.size(); ++w) residue[w] ^= row[w];
      x ^= coeffs_[r];
    }
  }
  for (Gf2Word w : residue)
    if (w != 0) return std::nullopt;
  return x;
}

int basis_length(const Gf2Matrix& m, std::span<const Gf2Word> codeword) {
  const Gf2Solver solver(m);
  const auto x = solver.solve(codeword);
  if (!x) throw std::invalid_argument("codeword not in the row space");
  return std::popcount(*x);
}

}  // namespace hcube
