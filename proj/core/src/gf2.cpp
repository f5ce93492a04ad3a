#include "qmor/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace qmor {

GF2Matrix::GF2Matrix(std::size_t cols)
    : cols_(cols), words_per_row_((cols + 63) / 64) {
  if (cols == 0) throw std::invalid_argument("GF2Matrix needs at least one column");
}

void GF2Matrix::append_row(const std::vector<std::uint8_t>& bits) {
  if (bits.size() != cols_) {
    throw std::invalid_argument("row length does not match column count");
  }
  data_.resize(data_.size() + words_per_row_, 0);
  std::uint64_t* row = data_.data() + rows_ * words_per_row_;
  for (std::size_t k = 0; k < cols_; ++k) {
    if (bits[k]) row[k / 64] |= 1ull << (k % 64);
  }
  ++rows_;
}

void GF2Matrix::append_row_words(const std::uint64_t* words) {
  data_.insert(data_.end(), words, words + words_per_row_);
  ++rows_;
}

bool GF2Matrix::get(std::size_t row, std::size_t col) const {
  return (row_words(row)[col / 64] >> (col % 64)) & 1u;
}

std::size_t gf2_rank(const GF2Matrix& m) {
  const std::size_t w = m.words_per_row();
  std::vector<std::uint64_t> work;
  work.reserve(m.rows() * w);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    work.insert(work.end(), m.row_words(r), m.row_words(r) + w);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    const std::size_t word = col / 64;
    const std::uint64_t mask = 1ull << (col % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows() && !(work[pivot * w + word] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t k = 0; k < w; ++k) {
      std::swap(work[rank * w + k], work[pivot * w + k]);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != rank && (work[r * w + word] & mask)) {
        for (std::size_t k = 0; k < w; ++k) work[r * w + k] ^= work[rank * w + k];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint8_t> symplectic_row(const BinaryPauli& p) {
  std::vector<std::uint8_t> row(2 * p.n, 0);
  for (std::uint32_t j = 0; j < p.n; ++j) {
    row[j] = p.z_bit(j);
    row[p.n + j] = p.x_bit(j);
  }
  return row;
}

GF2Matrix symplectic_matrix(const std::vector<BinaryPauli>& paulis) {
  if (paulis.empty()) throw std::invalid_argument("empty Pauli list");
  const std::uint32_t n = paulis.front().n;
  GF2Matrix m(2 * n);
  for (const auto& p : paulis) {
    if (p.n != n) throw std::invalid_argument("mixed site counts in Pauli list");
    m.append_row(symplectic_row(p));
  }
  return m;
}

}  // namespace qmor
