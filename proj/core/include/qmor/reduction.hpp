#pragma once

#include <string>
#include <vector>

#include "qmor/burnside.hpp"
#include "qmor/linalg.hpp"
#include "qmor/model.hpp"

namespace qmor {

// Orthonormal d x r map onto the minimal invariant subspace containing psi0.
struct ReductionMap {
  enum class Source { burnside, gramian, snapshots };
  ComplexMatrix phi;
  Source source = Source::burnside;

  Eigen::Index r() const { return phi.cols(); }
  Eigen::Index d() const { return phi.rows(); }
};

// Drops the trailing `drop` columns; deliberately breaks invariance to probe
// how wrong a too-small subspace gets.
ReductionMap truncate_map(const ReductionMap& map, Eigen::Index drop);

// Span of the algebra orbit {B psi0}: applies every basis element to psi0 in
// basis order (psi0 itself seeded first, so it is always exactly contained),
// then greedily selects independent vectors and orthonormalizes.
ReductionMap orbit_basis(const BurnsideBasis& basis, const StateVector& psi0,
                         double tol = defaults::rank_tol);

// max over the coefficient set (H_0 included) of ||(I - Phi Phi^dag) H_k Phi||_F.
double invariance_residual(const HamiltonianModel& model, const ComplexMatrix& phi);

// <psi0| p |psi0> for a product state over site labels {0, 1, +, -}, by
// per-site lookup: Z averages to +-1 on 0/1 sites, X to +-1 on +/- sites,
// anything else to 0.
Complex pauli_expectation(const BinaryPauli& p, const std::string& labels);

struct GramianSelection {
  ReductionMap map;
  std::vector<std::size_t> selected;  // indices into the Pauli basis
};

// Same subspace as orbit_basis for a Pauli basis and product state, but the
// independence decisions run on Gram determinants assembled from Pauli
// expectations, so no length-d vector appears until the final map is
// materialized.  A candidate joins iff the bordered Gramian keeps
// |det G| > det_tol (orbit vectors all have unit norm, so the scale factor in
// the threshold is 1).
GramianSelection gramian_select(const BurnsideBasis& basis, const std::string& labels,
                                double det_tol = defaults::gram_det_tol);

// Exact projected model: v' = Phi^dag H_k Phi, v0 = Phi^dag psi0.
struct ReducedModel {
  ComplexMatrix h0;
  std::vector<ComplexMatrix> terms;
  std::vector<std::string> labels;
  StateVector v0;

  Eigen::Index r() const { return h0.rows(); }
  ComplexMatrix evaluate(const std::vector<double>& lambda) const;
};

ReducedModel reduced_model(const HamiltonianModel& model, const ReductionMap& map,
                           const StateVector& psi0);

// Dense-free assembly for pure Pauli models and product states: every entry
// of Phi^dag H_k Phi is a Pauli expectation, with the orthonormalization
// factor taken from the Cholesky of the selected Gramian.  Matches
// reduced_model on the same selection.
ReducedModel reduced_model_pauli(const HamiltonianModel& model,
                                 const std::vector<BinaryPauli>& selected,
                                 const std::string& labels);

// Synthetic block structure Mat_q tensor 1_j used to exercise the orbit
// dimension formula on already-block-diagonal constructions.
struct BlockSpec {
  std::size_t q = 1;  // block matrix size
  std::size_t j = 1;  // multiplicity
};

// For nu partitioned along blocks (segment k reshaped to q_k x j_k, row
// index the Mat_q leg), the orbit dimension is sum_k q_k * rank(M_k).
std::size_t predicted_orbit_dim(const std::vector<BlockSpec>& blocks,
                                const StateVector& nu,
                                double tol = defaults::rank_tol);

}  // namespace qmor
