#pragma once

#include <cstdint>
#include <vector>

#include "qmor/pauli.hpp"

namespace qmor {

// Bit matrix over GF(2), rows packed into 64-bit words.  Column k of a row is
// bit k%64 of word k/64.
class GF2Matrix {
 public:
  explicit GF2Matrix(std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void append_row(const std::vector<std::uint8_t>& bits);
  void append_row_words(const std::uint64_t* words);

  bool get(std::size_t row, std::size_t col) const;

  const std::uint64_t* row_words(std::size_t row) const {
    return data_.data() + row * words_per_row_;
  }
  std::size_t words_per_row() const { return words_per_row_; }

 private:
  std::size_t cols_;
  std::size_t words_per_row_;
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> data_;
};

// Rank over GF(2) by Gaussian elimination on the packed rows.
std::size_t gf2_rank(const GF2Matrix& m);

// Row image of a Pauli string under the symplectic map: columns 0..n-1 hold
// the z bits (site order), columns n..2n-1 the x bits.  Phases are dropped.
std::vector<std::uint8_t> symplectic_row(const BinaryPauli& p);

// Stacks symplectic_row for each string into a (#strings) x 2n matrix.
GF2Matrix symplectic_matrix(const std::vector<BinaryPauli>& paulis);

}  // namespace qmor
