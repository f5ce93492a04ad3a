#pragma once

#include <cstdint>
#include <vector>

#include "qmor/pauli.hpp"

namespace qmor {

struct GroupOptions {
  // Gray-code enumeration touches 2^generators states; refuse beyond this.
  std::uint32_t max_generators = 30;
};

// Subgroup of the phase-free Pauli group generated by the given strings,
// closed under bitwise XOR of the (z, x) vectors.  Returns phase-0 strings in
// canonical (z, x) order, identity included.  Duplicate and identity
// generators are dropped before enumeration.
//
// Walks the Gray code over generator subsets so each step is a single XOR.
std::vector<BinaryPauli> generate_group_graycode(
    const std::vector<BinaryPauli>& generators, const GroupOptions& opts = {});

// Same subgroup by breadth-first closure: repeatedly XOR the frontier with
// every generator until nothing new appears.  Cross-check for the Gray-code
// walk; output is identical.
std::vector<BinaryPauli> generate_group_layered(
    const std::vector<BinaryPauli>& generators, const GroupOptions& opts = {});

// Term-count test: fewer than 2n support strings already forces a proper
// invariant subspace on n sites.
bool pauli_sufficiency_count(std::size_t n_support, std::uint32_t n_sites);

// Sharper test on the same data: GF(2) rank of the symplectic rows below 2n.
// For models whose parameters each control a single Pauli term this is exact,
// not just sufficient.
bool pauli_sufficiency_rank(const std::vector<BinaryPauli>& support,
                            std::uint32_t n_sites);

}  // namespace qmor
