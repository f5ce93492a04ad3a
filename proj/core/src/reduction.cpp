#include "qmor/reduction.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qmor {

namespace {

struct ProductMasks {
  std::uint32_t n = 0;
  std::uint64_t zsites = 0;  // sites labeled 0/1 (Z averages to +-1)
  std::uint64_t xsites = 0;  // sites labeled +/- (X averages to +-1)
  std::uint64_t ones = 0;    // sites labeled 1
  std::uint64_t minus = 0;   // sites labeled -
};

ProductMasks make_masks(const std::string& labels) {
  if (labels.empty() || labels.size() > BinaryPauli::max_sites) {
    throw std::invalid_argument("product-state label count out of range");
  }
  ProductMasks m;
  m.n = static_cast<std::uint32_t>(labels.size());
  for (std::uint32_t j = 0; j < m.n; ++j) {
    const std::uint64_t bit = 1ull << (m.n - 1 - j);
    switch (labels[j]) {
      case '0': m.zsites |= bit; break;
      case '1': m.zsites |= bit; m.ones |= bit; break;
      case '+': m.xsites |= bit; break;
      case '-': m.xsites |= bit; m.minus |= bit; break;
      default:
        throw std::invalid_argument("invalid site label '" + std::string(1, labels[j]) +
                                    "' (expected 0, 1, +, -)");
    }
  }
  return m;
}

Complex masked_expectation(const BinaryPauli& p, const ProductMasks& m) {
  if (p.n != m.n) throw std::invalid_argument("Pauli and state site counts differ");
  if ((p.z & p.x) != 0) return {0, 0};          // Y site
  if ((p.z & m.xsites) != 0) return {0, 0};     // Z letter on a +/- site
  if ((p.x & m.zsites) != 0) return {0, 0};     // X letter on a 0/1 site
  const int flips = std::popcount(p.z & m.ones) + std::popcount(p.x & m.minus);
  const Complex value = i_pow[p.phase & 3];
  return (flips & 1) ? -value : value;
}

}  // namespace

ReductionMap truncate_map(const ReductionMap& map, Eigen::Index drop) {
  if (drop < 0 || drop >= map.r()) {
    throw std::invalid_argument("truncation must drop between 0 and r-1 columns");
  }
  return ReductionMap{map.phi.leftCols(map.r() - drop), map.source};
}

ReductionMap orbit_basis(const BurnsideBasis& basis, const StateVector& psi0,
                         double tol) {
  const std::size_t d = basis.dim;
  if (static_cast<std::size_t>(psi0.size()) != d) {
    throw std::invalid_argument("state dimension does not match basis");
  }
  ComplexMatrix orbit(d, basis.size() + 1);
  orbit.col(0) = psi0;
  if (basis.mode == BurnsideBasis::Mode::dense) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      orbit.col(j + 1) = basis.dense_elements[j] * psi0;
    }
  } else {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      orbit.col(j + 1) = pauli_apply(basis.pauli_elements[j], psi0);
    }
  }
  const auto picked = select_independent_columns(orbit, tol);
  ComplexMatrix chosen(d, picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k) chosen.col(k) = orbit.col(picked[k]);
  return ReductionMap{orthonormal_columns(chosen), ReductionMap::Source::burnside};
}

double invariance_residual(const HamiltonianModel& model, const ComplexMatrix& phi) {
  double worst = 0.0;
  for (const auto& h : model.coeff_set()) {
    const ComplexMatrix hphi = h * phi;
    const double res = (hphi - phi * (phi.adjoint() * hphi)).norm();
    worst = std::max(worst, res);
  }
  return worst;
}

Complex pauli_expectation(const BinaryPauli& p, const std::string& labels) {
  return masked_expectation(p, make_masks(labels));
}

GramianSelection gramian_select(const BurnsideBasis& basis, const std::string& labels,
                                double det_tol) {
  if (basis.mode != BurnsideBasis::Mode::pauli) {
    throw std::invalid_argument("Gramian selection needs a Pauli basis");
  }
  const auto masks = make_masks(labels);
  const auto& elements = basis.pauli_elements;
  if (!elements.empty() && elements.front().n != masks.n) {
    throw std::invalid_argument("basis and state site counts differ");
  }

  std::vector<std::size_t> selected;
  std::vector<BinaryPauli> sel_paulis;
  // Lower Cholesky factor of the Gramian of the selected (unit norm) orbit
  // vectors, grown one border row per admission.
  ComplexMatrix chol;
  double running_det = 1.0;

  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    const auto& cand = elements[idx];
    const std::size_t k = selected.size();
    Eigen::VectorXcd border(k);
    bool parallel = false;
    for (std::size_t j = 0; j < k; ++j) {
      // <v_j | v_cand> = <psi0| B_j B_cand |psi0>; basis strings are phase-0
      // and Hermitian, so no adjoint is needed on B_j.
      const Complex val = masked_expectation(pauli_product(sel_paulis[j], cand), masks);
      if (std::abs(val) >= 1.0 - 1e-9) {
        // Unit vectors with |<u,v>| = 1 are parallel: the bordered Gramian
        // would be exactly singular.
        parallel = true;
        break;
      }
      border(j) = val;
    }
    if (parallel) continue;

    double schur = 1.0;
    Eigen::VectorXcd y;
    if (k > 0) {
      y = chol.topLeftCorner(k, k)
              .triangularView<Eigen::Lower>()
              .solve(border);
      schur = 1.0 - y.squaredNorm();
    }
    if (running_det * schur <= det_tol) continue;

    ComplexMatrix grown = ComplexMatrix::Zero(k + 1, k + 1);
    if (k > 0) {
      grown.topLeftCorner(k, k) = chol;
      grown.row(k).head(k) = y.adjoint();
    }
    grown(k, k) = std::sqrt(schur);
    chol = std::move(grown);
    running_det *= schur;
    selected.push_back(idx);
    sel_paulis.push_back(cand);
  }

  // Materialize only now: d-length vectors for the selected strings.
  const StateVector psi0 = product_state(labels);
  ComplexMatrix chosen(psi0.size(), selected.size());
  for (std::size_t k = 0; k < selected.size(); ++k) {
    chosen.col(k) = pauli_apply(sel_paulis[k], psi0);
  }
  GramianSelection out;
  out.map = ReductionMap{orthonormal_columns(chosen), ReductionMap::Source::gramian};
  out.selected = std::move(selected);
  return out;
}

ComplexMatrix ReducedModel::evaluate(const std::vector<double>& lambda) const {
  if (lambda.size() != terms.size()) {
    throw std::invalid_argument("expected " + std::to_string(terms.size()) +
                                " parameter values, got " + std::to_string(lambda.size()));
  }
  ComplexMatrix h = h0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (lambda[k] != 0.0) h += lambda[k] * terms[k];
  }
  return h;
}

ReducedModel reduced_model(const HamiltonianModel& model, const ReductionMap& map,
                           const StateVector& psi0) {
  if (static_cast<std::size_t>(map.d()) != model.dim() ||
      psi0.size() != map.d()) {
    throw std::invalid_argument("model, map, and state dimensions disagree");
  }
  auto project = [&](const Eigen::MatrixXcd& h) {
    ComplexMatrix ph = map.phi.adjoint() * (h * map.phi);
    return ((ph + ph.adjoint()) / 2.0).eval();  // scrub fp Hermiticity drift
  };
  ReducedModel out;
  out.h0 = project(model.h0().dense());
  for (const auto& t : model.terms()) out.terms.push_back(project(t.dense()));
  out.labels = model.labels();
  out.v0 = map.phi.adjoint() * psi0;
  return out;
}

ReducedModel reduced_model_pauli(const HamiltonianModel& model,
                                 const std::vector<BinaryPauli>& selected,
                                 const std::string& labels) {
  if (!model.pure_pauli()) {
    throw std::invalid_argument("dense-free assembly needs a pure Pauli model");
  }
  if (selected.empty()) throw std::invalid_argument("empty selection");
  const auto masks = make_masks(labels);
  const std::size_t r = selected.size();

  ComplexMatrix gram(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      gram(k, l) = masked_expectation(pauli_product(selected[k], selected[l]), masks);
    }
  }
  Eigen::LLT<ComplexMatrix> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("selection Gramian is not positive definite");
  }
  const ComplexMatrix low = llt.matrixL();
  auto whiten = [&](const ComplexMatrix& w) {
    // Phi = V L^{-dag}  =>  Phi^dag H Phi = L^{-1} W L^{-dag} with W = V^dag H V.
    ComplexMatrix a = low.triangularView<Eigen::Lower>().solve(w);
    ComplexMatrix b = low.triangularView<Eigen::Lower>().solve(a.adjoint());
    ComplexMatrix h = b.adjoint();
    return ((h + h.adjoint()) / 2.0).eval();
  };

  ReducedModel out;
  out.h0 = ComplexMatrix::Zero(r, r);
  for (const auto& term : model.terms()) {
    const auto& [alpha, p] = term.pauli_sum().terms().front();
    ComplexMatrix w(r, r);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t l = 0; l < r; ++l) {
        const BinaryPauli chain = pauli_product(selected[k], pauli_product(p, selected[l]));
        w(k, l) = alpha * masked_expectation(chain, masks);
      }
    }
    out.terms.push_back(whiten(w));
  }
  out.labels = model.labels();

  Eigen::VectorXcd b0(r);
  for (std::size_t k = 0; k < r; ++k) {
    // <v_k | psi0> = <psi0| B_k |psi0> (Hermitian, phase-0 strings).
    b0(k) = masked_expectation(selected[k], masks);
  }
  out.v0 = low.triangularView<Eigen::Lower>().solve(b0);
  return out;
}

std::size_t predicted_orbit_dim(const std::vector<BlockSpec>& blocks,
                                const StateVector& nu, double tol) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.q * b.j;
  if (total != static_cast<std::size_t>(nu.size())) {
    throw std::invalid_argument("block sizes do not partition the state");
  }
  std::size_t dim = 0;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    ComplexMatrix m(b.q, b.j);
    for (std::size_t a = 0; a < b.q; ++a) {
      for (std::size_t c = 0; c < b.j; ++c) m(a, c) = nu(offset + a * b.j + c);
    }
    dim += b.q * numeric_rank(m, tol);
    offset += b.q * b.j;
  }
  return dim;
}

}  // namespace qmor
