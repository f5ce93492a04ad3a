#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qmor/linalg.hpp"
#include "qmor/pauli.hpp"

namespace qmor {

// Real linear combination of distinct phase-free Pauli strings, identity
// excluded so every sum is traceless and exactly Hermitian.  Phases carried
// by added strings are folded into the coefficient (which must stay real).
class PauliSum {
 public:
  explicit PauliSum(std::uint32_t n);

  std::uint32_t sites() const { return n_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const std::vector<std::pair<double, BinaryPauli>>& terms() const { return terms_; }

  // Merges with an existing equal string; drops the term if the combined
  // coefficient cancels to zero.  Rejects identity strings and phases that
  // would make the coefficient imaginary.
  void add(double coeff, const BinaryPauli& p);

  Eigen::MatrixXcd dense() const;
  void apply_into(const StateVector& v, StateVector& out) const;

 private:
  std::uint32_t n_;
  std::vector<std::pair<double, BinaryPauli>> terms_;
};

// One Hamiltonian coefficient matrix: either a Pauli sum or an explicit dense
// Hermitian matrix (used by synthetic models whose dimension is not a power
// of two).
class Term {
 public:
  explicit Term(PauliSum sum);
  explicit Term(Eigen::MatrixXcd dense, double hermiticity_tol = 1e-12);

  bool is_pauli() const { return std::holds_alternative<PauliSum>(payload_); }
  bool is_zero() const;
  const PauliSum& pauli_sum() const { return std::get<PauliSum>(payload_); }

  std::size_t dim() const { return dim_; }
  Eigen::MatrixXcd dense() const;
  StateVector apply(const StateVector& v) const;

 private:
  std::variant<PauliSum, Eigen::MatrixXcd> payload_;
  std::size_t dim_;
};

// Parameterized Hamiltonian H(lambda) = H_0 + sum_k lambda_k H_k on a
// d-dimensional space.  Immutable after construction; spin models carry the
// site count so symbolic (bit-level) paths apply.
class HamiltonianModel {
 public:
  HamiltonianModel(Term h0, std::vector<Term> terms, std::vector<std::string> labels,
                   std::optional<std::uint32_t> sites = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t parameters() const { return terms_.size(); }
  std::optional<std::uint32_t> sites() const { return sites_; }

  const Term& h0() const { return h0_; }
  const Term& term(std::size_t k) const { return terms_.at(k); }
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool pauli_representable() const;
  // Every parameter controls exactly one Pauli string (and H_0 is absent).
  bool pure_pauli() const;

  Eigen::MatrixXcd evaluate(const std::vector<double>& lambda) const;

  // {H_0, H_1, ..., H_M} as dense matrices, the generator set of the
  // reduction algebra.
  std::vector<Eigen::MatrixXcd> coeff_set() const;

  // Distinct Pauli strings with nonzero coefficient across H_0..H_M, in
  // first-appearance order.  Requires pauli_representable().
  std::vector<BinaryPauli> support_paulis() const;

 private:
  Term h0_;
  std::vector<Term> terms_;
  std::vector<std::string> labels_;
  std::size_t dim_;
  std::optional<std::uint32_t> sites_;
};

// One independent parameter per support Pauli, coefficient 1: the enclosing
// model whose reduction algebra is parameter-independent by construction.
// A model already in that form comes back unchanged.
HamiltonianModel over_parameterize(const HamiltonianModel& model);

// --- built-in models -------------------------------------------------------

// lambda_x sum X_j + lambda_y sum Y_j + lambda_z sum Z_j
HamiltonianModel collective_rotation(std::uint32_t n);
// -B sum X_j - J (sum_{j<n} Z_j Z_{j+1} + Z_n Z_1); the n=2 ring doubles its
// single bond.  lambda = (B, J).
HamiltonianModel tfim_periodic(std::uint32_t n);
// sum B_j X_j + sum_{j<n} J_j Z_j Z_{j+1} with every coupling its own
// parameter (2n-1 of them), open chain.
HamiltonianModel random_tfim_open(std::uint32_t n);

HamiltonianModel builtin_model(const std::string& name, std::uint32_t n);

// --- states ----------------------------------------------------------------

// Tensor product over site labels drawn from {0, 1, +, -}; first character is
// site 0.
StateVector product_state(const std::string& labels);

struct GroundState {
  StateVector state;
  double energy;
  double gap;  // second eigenvalue minus the lowest (infinity when d = 1)
  // gap fell under degeneracy_gap_tol: the selected vector is then one
  // representative of a near-degenerate multiplet.
  bool degenerate;
};

inline constexpr double degeneracy_gap_tol = 1e-8;

// Ground state of H(lambda).  Among eigenvectors within degeneracy_gap_tol of
// the bottom, picks the one whose leading nonzero amplitude has the largest
// magnitude (earliest index on ties) and fixes the global phase so that
// amplitude is real positive.
GroundState ground_state(const HamiltonianModel& model,
                         const std::vector<double>& lambda);

// All eigenvectors within `window` of the lowest eigenvalue, phase-fixed the
// same way; lets callers probe every member of a near-degenerate multiplet.
std::vector<StateVector> ground_state_multiplet(const HamiltonianModel& model,
                                                const std::vector<double>& lambda,
                                                double window = degeneracy_gap_tol);

struct ModelWithState {
  HamiltonianModel model;
  StateVector psi0;  // unit norm, dimension model.dim()
};

}  // namespace qmor
