#include "qmor/group.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "qmor/gf2.hpp"

namespace qmor {

namespace {

struct BitsHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    std::uint64_t h = k.first * 0x9e3779b97f4a7c15ull;
    h ^= h >> 32;
    h += k.second * 0xbf58476d1ce4e5b9ull;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

using BitsSet = std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, BitsHash>;

std::uint32_t require_uniform_sites(const std::vector<BinaryPauli>& paulis) {
  if (paulis.empty()) {
    throw std::invalid_argument("generator list must carry a site count; got none");
  }
  const std::uint32_t n = paulis.front().n;
  for (const auto& p : paulis) {
    if (p.n != n) throw std::invalid_argument("mixed site counts in generator list");
  }
  return n;
}

// Distinct non-identity generator bit patterns, input order kept.
std::vector<std::pair<std::uint64_t, std::uint64_t>> dedup_generators(
    const std::vector<BinaryPauli>& generators) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> gens;
  BitsSet seen;
  for (const auto& g : generators) {
    const auto key = std::make_pair(g.z, g.x);
    if (g.is_identity_bits() || !seen.insert(key).second) continue;
    gens.push_back(key);
  }
  return gens;
}

std::vector<BinaryPauli> sorted_elements(std::uint32_t n, const BitsSet& set) {
  std::vector<BinaryPauli> out;
  out.reserve(set.size());
  for (const auto& [zb, xb] : set) out.push_back(BinaryPauli{n, zb, xb, 0});
  std::sort(out.begin(), out.end(),
            [](const BinaryPauli& a, const BinaryPauli& b) { return bits_less(a, b); });
  return out;
}

}  // namespace

std::vector<BinaryPauli> generate_group_graycode(
    const std::vector<BinaryPauli>& generators, const GroupOptions& opts) {
  const std::uint32_t n = require_uniform_sites(generators);
  const auto gens = dedup_generators(generators);
  if (gens.size() > opts.max_generators) {
    throw std::invalid_argument("generator count " + std::to_string(gens.size()) +
                                " exceeds Gray-code cap of " +
                                std::to_string(opts.max_generators));
  }
  BitsSet set;
  set.reserve(std::size_t{2} << std::min<std::size_t>(gens.size(), 24));
  set.insert({0, 0});
  std::uint64_t zb = 0, xb = 0;
  const std::uint64_t total = 1ull << gens.size();
  // gray(j) and gray(j-1) differ exactly in bit ctz(j), so each step XORs in
  // one generator and visits every subset sum once.
  for (std::uint64_t j = 1; j < total; ++j) {
    const auto& g = gens[std::countr_zero(j)];
    zb ^= g.first;
    xb ^= g.second;
    set.insert({zb, xb});
  }
  return sorted_elements(n, set);
}

std::vector<BinaryPauli> generate_group_layered(
    const std::vector<BinaryPauli>& generators, const GroupOptions& opts) {
  const std::uint32_t n = require_uniform_sites(generators);
  const auto gens = dedup_generators(generators);
  if (gens.size() > opts.max_generators) {
    throw std::invalid_argument("generator count " + std::to_string(gens.size()) +
                                " exceeds enumeration cap of " +
                                std::to_string(opts.max_generators));
  }
  BitsSet seen;
  seen.insert({0, 0});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        const auto c = std::make_pair(w.first ^ g.first, w.second ^ g.second);
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  return sorted_elements(n, seen);
}

bool pauli_sufficiency_count(std::size_t n_support, std::uint32_t n_sites) {
  return n_support < 2 * static_cast<std::size_t>(n_sites);
}

bool pauli_sufficiency_rank(const std::vector<BinaryPauli>& support,
                            std::uint32_t n_sites) {
  if (support.empty()) return true;
  return gf2_rank(symplectic_matrix(support)) < 2 * static_cast<std::size_t>(n_sites);
}

}  // namespace qmor
