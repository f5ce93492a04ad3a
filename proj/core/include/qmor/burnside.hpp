#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmor/group.hpp"
#include "qmor/linalg.hpp"
#include "qmor/model.hpp"

namespace qmor {

// Basis of the unital algebra generated by the coefficient matrices: a
// maximal independent set of monomials.  Either dense matrices (normalized to
// unit Frobenius norm, identity first) or phase-free Pauli strings in
// canonical order (identity included).
struct BurnsideBasis {
  enum class Mode { dense, pauli };
  Mode mode = Mode::dense;
  std::vector<Eigen::MatrixXcd> dense_elements;
  std::vector<BinaryPauli> pauli_elements;
  std::size_t dim = 0;    // ambient dimension d
  int layers_used = 0;    // highest monomial degree that contributed

  std::size_t size() const {
    return mode == Mode::dense ? dense_elements.size() : pauli_elements.size();
  }
};

// Dimension count d^2 forces monomial spans to stabilize within
// ceil((d^2+2)/3) multiplication layers (Paz's bound on generation length).
std::size_t paz_layer_bound(std::size_t d);

enum class DenseStrategy {
  // Admit each monomial product immediately iff independent of the span so
  // far; only admitted monomials breed the next layer.
  span_check,
  // Breed every monomial (no per-candidate check), stop once a whole layer
  // adds no rank, then post-filter the collection down to an independent set.
  // Exponential fan-out; meant as a cross-check on small models.
  paz_bound,
};

struct BurnsideOptions {
  double tol = defaults::rank_tol;  // residual per product of unit-norm factors
  DenseStrategy strategy = DenseStrategy::span_check;
  std::size_t max_monomials = 200000;  // fan-out guard for paz_bound
};

// Breadth-first monomial generation over the dense coefficient matrices,
// right-multiplying by the coefficients in input order.  Zero coefficients
// are skipped; the identity seeds the basis.
BurnsideBasis burnside_basis_dense(const std::vector<Eigen::MatrixXcd>& coeffs,
                                   const BurnsideOptions& opts = {});

// Exact bit-level route for models whose parameters each control one Pauli
// string: the algebra basis is the XOR-subgroup generated by the support.
BurnsideBasis burnside_basis_pauli(const std::vector<BinaryPauli>& support,
                                   const GroupOptions& opts = {});

struct CertificateReport {
  enum class Verdict { reducible, irreducible, unknown };
  Verdict verdict = Verdict::unknown;
  std::optional<std::size_t> dim_algebra;  // known only for exact routes
  std::size_t dim_full = 0;                // d^2
  std::string method;                      // "count", "rank", or "burnside"
  int layers_used = 0;

  bool reducible() const { return verdict == Verdict::reducible; }
};

struct CertifyOptions {
  // Dense monomial generation stores O(|basis| * d^2) doubles; refuse beyond
  // this dimension and report unknown instead.
  std::size_t max_dense_dim = 256;
  BurnsideOptions burnside;
  GroupOptions group;
};

// Decides whether a parameter-independent proper invariant subspace exists,
// i.e. whether the generated algebra is smaller than the full matrix algebra.
// Tries the cheapest conclusive route first: support count below 2n, then
// GF(2) rank of the symplectic rows (exact for pure Pauli models), then dense
// monomial generation.
CertificateReport certify(const HamiltonianModel& model,
                          const CertifyOptions& opts = {});

}  // namespace qmor
