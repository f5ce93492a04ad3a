#include "qmor/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qmor {

namespace {

void check_sites(std::uint64_t n) {
  if (n == 0 || n > BinaryPauli::max_sites) {
    throw std::invalid_argument("Pauli site count must be in [1, 64], got " +
                                std::to_string(n));
  }
}

}  // namespace

BinaryPauli BinaryPauli::identity(std::uint32_t n) {
  check_sites(n);
  return BinaryPauli{n, 0, 0, 0};
}

BinaryPauli BinaryPauli::from_label(std::string_view label) {
  check_sites(label.size());
  BinaryPauli p{static_cast<std::uint32_t>(label.size()), 0, 0, 0};
  for (std::uint32_t j = 0; j < p.n; ++j) {
    const std::uint64_t bit = 1ull << (p.n - 1 - j);
    switch (label[j]) {
      case 'I': break;
      case 'X': p.x |= bit; break;
      case 'Y': p.z |= bit; p.x |= bit; break;
      case 'Z': p.z |= bit; break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" +
                                    std::string(1, label[j]) + "' at position " +
                                    std::to_string(j));
    }
  }
  return p;
}

BinaryPauli BinaryPauli::from_binary_string(std::string_view bits) {
  const auto sep = bits.find('|');
  if (sep == std::string_view::npos) {
    throw std::invalid_argument("binary Pauli string needs a 'z|x' separator");
  }
  const auto zs = bits.substr(0, sep);
  const auto xs = bits.substr(sep + 1);
  if (zs.size() != xs.size()) {
    throw std::invalid_argument("z and x halves differ in length");
  }
  check_sites(zs.size());
  BinaryPauli p{static_cast<std::uint32_t>(zs.size()), 0, 0, 0};
  for (std::uint32_t j = 0; j < p.n; ++j) {
    const std::uint64_t bit = 1ull << (p.n - 1 - j);
    if (zs[j] == '1') p.z |= bit;
    else if (zs[j] != '0')
      throw std::invalid_argument("invalid bit at z position " + std::to_string(j));
    if (xs[j] == '1') p.x |= bit;
    else if (xs[j] != '0')
      throw std::invalid_argument("invalid bit at x position " + std::to_string(j));
  }
  return p;
}

std::string BinaryPauli::label() const {
  std::string out(n, 'I');
  for (std::uint32_t j = 0; j < n; ++j) {
    const bool zb = z_bit(j), xb = x_bit(j);
    if (zb && xb) out[j] = 'Y';
    else if (xb) out[j] = 'X';
    else if (zb) out[j] = 'Z';
  }
  return out;
}

std::string BinaryPauli::binary_string() const {
  std::string out;
  out.reserve(2 * n + 1);
  for (std::uint32_t j = 0; j < n; ++j) out.push_back(z_bit(j) ? '1' : '0');
  out.push_back('|');
  for (std::uint32_t j = 0; j < n; ++j) out.push_back(x_bit(j) ? '1' : '0');
  return out;
}

std::uint32_t BinaryPauli::weight() const {
  return static_cast<std::uint32_t>(std::popcount(z | x));
}

BinaryPauli BinaryPauli::adjoint() const {
  // (i^phase P)^dag = i^{-phase} P for the Hermitian letter product P.
  BinaryPauli out = *this;
  out.phase = static_cast<std::uint8_t>((4 - phase) & 3);
  return out;
}

int phase_exponent(const BinaryPauli& a, const BinaryPauli& b) {
  if (a.n != b.n) throw std::invalid_argument("Pauli size mismatch");
  int e = 0;
  std::uint64_t active = (a.z | a.x) & (b.z | b.x);
  while (active) {
    const std::uint32_t k = std::countr_zero(active);
    active &= active - 1;
    const int z1 = (a.z >> k) & 1, x1 = (a.x >> k) & 1;
    const int z2 = (b.z >> k) & 1, x2 = (b.x >> k) & 1;
    e += x2 * z1 * (1 + 2 * z2 + 2 * x1);
    e -= x1 * z2 * (1 + 2 * z1 + 2 * x2);
  }
  return ((e % 4) + 4) & 3;
}

BinaryPauli pauli_product(const BinaryPauli& a, const BinaryPauli& b) {
  const int g = phase_exponent(a, b);
  BinaryPauli out{a.n, a.z ^ b.z, a.x ^ b.x,
                  static_cast<std::uint8_t>((a.phase + b.phase + g) & 3)};
  return out;
}

Eigen::MatrixXcd pauli_dense(const BinaryPauli& p) {
  if (p.n > 14) {
    throw std::invalid_argument("refusing dense realization beyond 14 sites");
  }
  const std::uint64_t d = 1ull << p.n;
  const std::uint64_t ycount = std::popcount(p.z & p.x);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::uint64_t b = 0; b < d; ++b) {
    const int e = (p.phase + ycount + 2 * std::popcount(p.z & b)) & 3;
    m(b ^ p.x, b) = i_pow[e];
  }
  return m;
}

Eigen::VectorXcd pauli_apply(const BinaryPauli& p, const Eigen::VectorXcd& v) {
  const std::uint64_t d = v.size();
  if (d != (1ull << p.n)) {
    throw std::invalid_argument("state dimension does not match Pauli sites");
  }
  const std::uint64_t ycount = std::popcount(p.z & p.x);
  Eigen::VectorXcd out(d);
  for (std::uint64_t b = 0; b < d; ++b) {
    const int e = (p.phase + ycount + 2 * std::popcount(p.z & b)) & 3;
    out(b ^ p.x) = i_pow[e] * v(b);
  }
  return out;
}

}  // namespace qmor
