#include "qmor/linalg.hpp"

#include <stdexcept>

namespace qmor {

std::vector<Eigen::Index> select_independent_columns(const ComplexMatrix& m,
                                                     double tol) {
  std::vector<Eigen::Index> selected;
  if (m.cols() == 0) return selected;
  double largest = 0.0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    largest = std::max(largest, m.col(c).norm());
  }
  if (largest == 0.0) return selected;
  const double threshold = tol * largest;
  ComplexMatrix q(m.rows(), std::min(m.rows(), m.cols()));
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    StateVector v = m.col(c);
    if (r > 0) {
      v.noalias() -= q.leftCols(r) * (q.leftCols(r).adjoint() * v);
    }
    if (v.norm() <= threshold) continue;
    if (r > 0) {
      v.noalias() -= q.leftCols(r) * (q.leftCols(r).adjoint() * v);
    }
    q.col(r) = v / v.norm();
    selected.push_back(c);
    ++r;
    if (r >= m.rows()) {
      // Span is already the whole space; every further column is dependent.
      break;
    }
  }
  return selected;
}

std::size_t numeric_rank(const ComplexMatrix& m, double tol) {
  return select_independent_columns(m, tol).size();
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& m) {
  ComplexMatrix q = m;
  for (Eigen::Index c = 0; c < q.cols(); ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      if (c > 0) {
        q.col(c).noalias() -= q.leftCols(c) * (q.leftCols(c).adjoint() * q.col(c)).eval();
      }
    }
    const double norm = q.col(c).norm();
    if (norm < 1e-14) {
      throw std::invalid_argument("orthonormal_columns got dependent columns");
    }
    q.col(c) /= norm;
  }
  return q;
}

Eigensystem hermitian_eig(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix not square");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed to converge");
  }
  return Eigensystem{solver.eigenvalues(), solver.eigenvectors()};
}

StateVector evolve(const ComplexMatrix& a, const StateVector& v, double t) {
  return evolve(hermitian_eig(a), v, t);
}

StateVector evolve(const Eigensystem& es, const StateVector& v, double t) {
  if (es.vectors.rows() != v.size()) {
    throw std::invalid_argument("state dimension does not match operator");
  }
  StateVector coeffs = es.vectors.adjoint() * v;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k) {
    coeffs(k) *= std::exp(Complex(0, -es.values(k) * t));
  }
  return es.vectors * coeffs;
}

ComplexMatrix gram_matrix(const ComplexMatrix& m) {
  return m.adjoint() * m;
}

}  // namespace qmor
