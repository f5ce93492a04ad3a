#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qmor/pauli.hpp"

namespace qmor {

using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

namespace defaults {
// Residual threshold for column-independence decisions, relative to the
// largest column norm of the set under test.
inline constexpr double rank_tol = 1e-9;
// |det G| floor for Gramian admission of unit-norm vectors.
inline constexpr double gram_det_tol = 1e-12;
}  // namespace defaults

// Greedy independent-column selection: columns are scanned left to right and
// one joins iff its residual against the span of the already selected columns
// exceeds tol times the largest column norm of the whole set.  Testing raw
// residuals against one shared threshold means a column whose content sits at
// roundoff scale relative to the dominant columns -- e.g. a near-cancelling
// difference -- reads as dependent instead of being normalized up into a
// spurious direction.  Returns the selected column indices in scan order.
std::vector<Eigen::Index> select_independent_columns(const ComplexMatrix& m,
                                                     double tol = defaults::rank_tol);

std::size_t numeric_rank(const ComplexMatrix& m, double tol = defaults::rank_tol);

// Modified Gram-Schmidt with a second orthogonalization pass, so column j of
// the result spans the same flag as the first j input columns and Q^dag Q
// stays at identity to ~1e-14.  Input columns must be linearly independent
// (feed it what select_independent_columns picked).
ComplexMatrix orthonormal_columns(const ComplexMatrix& m);

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  ComplexMatrix vectors;   // columns, unitary
};

// Hermitian eigendecomposition (input symmetrized by the solver's use of the
// lower triangle).
Eigensystem hermitian_eig(const ComplexMatrix& a);

// exp(-i a t) v through the eigendecomposition of Hermitian a.
StateVector evolve(const ComplexMatrix& a, const StateVector& v, double t);
// Same but with the decomposition precomputed (one matrix, many times).
StateVector evolve(const Eigensystem& es, const StateVector& v, double t);

// G(k, l) = <v_k | v_l> for the columns of m.
ComplexMatrix gram_matrix(const ComplexMatrix& m);

}  // namespace qmor
