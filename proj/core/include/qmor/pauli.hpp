#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qmor {

using Complex = std::complex<double>;

inline constexpr std::array<Complex, 4> i_pow = {
    Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

// Pauli string on n sites in binary symplectic form: a (z, x) bit pair per
// site plus a global power of i.  Site j (0-based, first character of the
// label) lives at bit n-1-j of the words, so the x word doubles as the basis
// index permutation mask: |b> indices are b_0*2^(n-1) + ... + b_{n-1} and
// applying the string sends index b to b ^ x.
//
// Per-site letters: (z,x) = (0,0) -> I, (0,1) -> X, (1,1) -> Y, (1,0) -> Z.
// The matrix represented is i^phase times the plain tensor product of the
// letters, so phase == 0 means the Hermitian Pauli string itself.
struct BinaryPauli {
  std::uint32_t n = 1;
  std::uint64_t z = 0;
  std::uint64_t x = 0;
  std::uint8_t phase = 0;  // power of i, mod 4

  static constexpr std::uint32_t max_sites = 64;

  static BinaryPauli identity(std::uint32_t n);
  // Parses an uppercase label like "XIZ"; throws std::invalid_argument with
  // the offending position for anything outside {I,X,Y,Z}.
  static BinaryPauli from_label(std::string_view label);
  // Parses the "z|x" form, e.g. "10|01"; first bit of each half is site 0.
  static BinaryPauli from_binary_string(std::string_view bits);

  std::string label() const;
  std::string binary_string() const;

  bool z_bit(std::uint32_t site) const { return (z >> (n - 1 - site)) & 1u; }
  bool x_bit(std::uint32_t site) const { return (x >> (n - 1 - site)) & 1u; }

  bool is_identity_bits() const { return z == 0 && x == 0; }
  std::uint32_t weight() const;  // number of non-identity sites

  BinaryPauli adjoint() const;

  bool operator==(const BinaryPauli&) const = default;

  // Canonical order on bit patterns (phase ignored): lexicographic on (z, x).
  friend bool bits_less(const BinaryPauli& a, const BinaryPauli& b) {
    return a.z != b.z ? a.z < b.z : a.x < b.x;
  }
  friend bool bits_equal(const BinaryPauli& a, const BinaryPauli& b) {
    return a.z == b.z && a.x == b.x;
  }
};

// Power of i picked up when multiplying the phase-free strings:
// P(a) * P(b) = i^g P(a.z ^ b.z, a.x ^ b.x).
int phase_exponent(const BinaryPauli& a, const BinaryPauli& b);

// Exact product; bit vectors XOR, phases add with the mixing exponent.
BinaryPauli pauli_product(const BinaryPauli& a, const BinaryPauli& b);

// Dense 2^n x 2^n realization.  Guarded to n <= 14 so a stray symbolic-size
// string cannot allocate gigabytes.
Eigen::MatrixXcd pauli_dense(const BinaryPauli& p);

// p * v without materializing the matrix; O(2^n).
Eigen::VectorXcd pauli_apply(const BinaryPauli& p, const Eigen::VectorXcd& v);

}  // namespace qmor
