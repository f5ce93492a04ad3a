#include "qmor/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmor {

namespace {

constexpr double coeff_eps = 0.0;  // exact cancellation only

}  // namespace

PauliSum::PauliSum(std::uint32_t n) : n_(n) {
  if (n == 0 || n > BinaryPauli::max_sites) {
    throw std::invalid_argument("PauliSum site count out of range");
  }
}

void PauliSum::add(double coeff, const BinaryPauli& p) {
  if (p.n != n_) throw std::invalid_argument("Pauli site count mismatch in sum");
  if (p.is_identity_bits()) {
    throw std::invalid_argument("identity terms are excluded (sums are traceless)");
  }
  double c = coeff;
  switch (p.phase & 3) {
    case 0: break;
    case 2: c = -c; break;
    default:
      throw std::invalid_argument("Pauli phase i^" + std::to_string(p.phase) +
                                  " would make the coefficient imaginary");
  }
  if (c == 0.0) return;
  BinaryPauli canon{n_, p.z, p.x, 0};
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (bits_equal(it->second, canon)) {
      it->first += c;
      if (std::abs(it->first) <= coeff_eps) terms_.erase(it);
      return;
    }
  }
  terms_.emplace_back(c, canon);
}

Eigen::MatrixXcd PauliSum::dense() const {
  const std::size_t d = std::size_t{1} << n_;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& [c, p] : terms_) m += c * pauli_dense(p);
  return m;
}

void PauliSum::apply_into(const StateVector& v, StateVector& out) const {
  out.setZero(v.size());
  for (const auto& [c, p] : terms_) out += c * pauli_apply(p, v);
}

Term::Term(PauliSum sum) : payload_(std::move(sum)) {
  dim_ = std::size_t{1} << std::get<PauliSum>(payload_).sites();
}

Term::Term(Eigen::MatrixXcd dense, double hermiticity_tol)
    : payload_(std::move(dense)) {
  const auto& m = std::get<Eigen::MatrixXcd>(payload_);
  if (m.rows() != m.cols()) throw std::invalid_argument("term matrix not square");
  dim_ = static_cast<std::size_t>(m.rows());
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > hermiticity_tol * scale) {
    throw std::invalid_argument("term matrix is not Hermitian");
  }
}

bool Term::is_zero() const {
  if (is_pauli()) return pauli_sum().empty();
  return std::get<Eigen::MatrixXcd>(payload_).isZero(0.0);
}

Eigen::MatrixXcd Term::dense() const {
  if (is_pauli()) return pauli_sum().dense();
  return std::get<Eigen::MatrixXcd>(payload_);
}

StateVector Term::apply(const StateVector& v) const {
  if (is_pauli()) {
    StateVector out;
    pauli_sum().apply_into(v, out);
    return out;
  }
  return std::get<Eigen::MatrixXcd>(payload_) * v;
}

HamiltonianModel::HamiltonianModel(Term h0, std::vector<Term> terms,
                                   std::vector<std::string> labels,
                                   std::optional<std::uint32_t> sites)
    : h0_(std::move(h0)),
      terms_(std::move(terms)),
      labels_(std::move(labels)),
      dim_(h0_.dim()),
      sites_(sites) {
  if (terms_.empty()) throw std::invalid_argument("model needs at least one parameter");
  if (labels_.size() != terms_.size()) {
    throw std::invalid_argument("one label per parameter required");
  }
  for (const auto& t : terms_) {
    if (t.dim() != dim_) throw std::invalid_argument("term dimensions disagree");
  }
  if (!sites_) {
    for (const auto& t : terms_) {
      if (t.is_pauli()) {
        sites_ = t.pauli_sum().sites();
        break;
      }
    }
  }
  if (sites_ && (std::size_t{1} << *sites_) != dim_) {
    throw std::invalid_argument("site count inconsistent with dimension");
  }
}

bool HamiltonianModel::pauli_representable() const {
  if (!h0_.is_pauli() && !h0_.is_zero()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.is_pauli(); });
}

bool HamiltonianModel::pure_pauli() const {
  if (!pauli_representable() || !h0_.is_zero()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.pauli_sum().size() == 1; });
}

Eigen::MatrixXcd HamiltonianModel::evaluate(const std::vector<double>& lambda) const {
  if (lambda.size() != terms_.size()) {
    throw std::invalid_argument("expected " + std::to_string(terms_.size()) +
                                " parameter values, got " + std::to_string(lambda.size()));
  }
  Eigen::MatrixXcd h = h0_.dense();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (lambda[k] != 0.0) h += lambda[k] * terms_[k].dense();
  }
  return h;
}

std::vector<Eigen::MatrixXcd> HamiltonianModel::coeff_set() const {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(terms_.size() + 1);
  out.push_back(h0_.dense());
  for (const auto& t : terms_) out.push_back(t.dense());
  return out;
}

std::vector<BinaryPauli> HamiltonianModel::support_paulis() const {
  if (!pauli_representable()) {
    throw std::invalid_argument("support requires Pauli-sum terms");
  }
  std::vector<BinaryPauli> out;
  auto collect = [&](const Term& t) {
    if (!t.is_pauli()) return;  // zero dense h0
    for (const auto& [c, p] : t.pauli_sum().terms()) {
      const bool known = std::any_of(out.begin(), out.end(), [&](const BinaryPauli& q) {
        return bits_equal(q, p);
      });
      if (!known) out.push_back(p);
    }
  };
  collect(h0_);
  for (const auto& t : terms_) collect(t);
  return out;
}

HamiltonianModel over_parameterize(const HamiltonianModel& model) {
  if (model.pure_pauli()) return model;
  if (!model.sites()) {
    throw std::invalid_argument("over-parameterization needs a spin model");
  }
  const auto support = model.support_paulis();
  const std::uint32_t n = *model.sites();
  std::vector<Term> terms;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < support.size(); ++j) {
    PauliSum s(n);
    s.add(1.0, support[j]);
    terms.emplace_back(std::move(s));
    labels.push_back("Lambda_" + std::to_string(j + 1));
  }
  return HamiltonianModel(Term(PauliSum(n)), std::move(terms), std::move(labels), n);
}

HamiltonianModel collective_rotation(std::uint32_t n) {
  if (n == 0 || n > 14) throw std::invalid_argument("collective rotation needs 1..14 sites");
  auto total = [&](char letter) {
    PauliSum s(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::string label(n, 'I');
      label[j] = letter;
      s.add(1.0, BinaryPauli::from_label(label));
    }
    return Term(std::move(s));
  };
  std::vector<Term> terms;
  terms.push_back(total('X'));
  terms.push_back(total('Y'));
  terms.push_back(total('Z'));
  return HamiltonianModel(Term(PauliSum(n)), std::move(terms),
                          {"lambda_x", "lambda_y", "lambda_z"}, n);
}

HamiltonianModel tfim_periodic(std::uint32_t n) {
  if (n < 2 || n > 14) throw std::invalid_argument("periodic TFIM needs 2..14 sites");
  PauliSum field(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    std::string label(n, 'I');
    label[j] = 'X';
    field.add(-1.0, BinaryPauli::from_label(label));
  }
  PauliSum bonds(n);
  for (std::uint32_t j = 0; j < n; ++j) {  // ring; j = n-1 wraps to site 0
    std::string label(n, 'I');
    label[j] = 'Z';
    label[(j + 1) % n] = 'Z';
    bonds.add(-1.0, BinaryPauli::from_label(label));
  }
  std::vector<Term> terms;
  terms.emplace_back(std::move(field));
  terms.emplace_back(std::move(bonds));
  return HamiltonianModel(Term(PauliSum(n)), std::move(terms), {"B", "J"}, n);
}

HamiltonianModel random_tfim_open(std::uint32_t n) {
  if (n == 0 || n > 14) throw std::invalid_argument("open TFIM needs 1..14 sites");
  std::vector<Term> terms;
  std::vector<std::string> labels;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::string label(n, 'I');
    label[j] = 'X';
    PauliSum s(n);
    s.add(1.0, BinaryPauli::from_label(label));
    terms.emplace_back(std::move(s));
    labels.push_back("B_" + std::to_string(j + 1));
  }
  for (std::uint32_t j = 0; j + 1 < n; ++j) {
    std::string label(n, 'I');
    label[j] = 'Z';
    label[j + 1] = 'Z';
    PauliSum s(n);
    s.add(1.0, BinaryPauli::from_label(label));
    terms.emplace_back(std::move(s));
    labels.push_back("J_" + std::to_string(j + 1));
  }
  return HamiltonianModel(Term(PauliSum(n)), std::move(terms), std::move(labels), n);
}

HamiltonianModel builtin_model(const std::string& name, std::uint32_t n) {
  if (name == "collective") return collective_rotation(n);
  if (name == "tfim") return tfim_periodic(n);
  if (name == "random-tfim") return random_tfim_open(n);
  throw std::invalid_argument("unknown builtin model '" + name +
                              "' (expected collective, tfim, or random-tfim)");
}

StateVector product_state(const std::string& labels) {
  if (labels.empty() || labels.size() > 20) {
    throw std::invalid_argument("product state needs 1..20 site labels");
  }
  const double s = 1.0 / std::sqrt(2.0);
  StateVector state = StateVector::Ones(1);
  for (char c : labels) {
    Eigen::Vector2cd site;
    switch (c) {
      case '0': site << 1, 0; break;
      case '1': site << 0, 1; break;
      case '+': site << s, s; break;
      case '-': site << s, -s; break;
      default:
        throw std::invalid_argument("invalid site label '" + std::string(1, c) +
                                    "' (expected 0, 1, +, -)");
    }
    StateVector next(state.size() * 2);
    for (Eigen::Index b = 0; b < state.size(); ++b) {
      next(2 * b) = state(b) * site(0);
      next(2 * b + 1) = state(b) * site(1);
    }
    state = std::move(next);
  }
  return state;
}

namespace {

void fix_phase(StateVector& v) {
  // Scale so the leading nonzero amplitude is real positive.
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

Eigen::Index leading_amplitude(const StateVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) return i;
  }
  return v.size() - 1;
}

}  // namespace

GroundState ground_state(const HamiltonianModel& model,
                         const std::vector<double>& lambda) {
  const auto es = hermitian_eig(model.evaluate(lambda));
  const double e0 = es.values(0);
  Eigen::Index count = 1;
  while (count < es.values.size() && es.values(count) - e0 < degeneracy_gap_tol) {
    ++count;
  }
  // Tie-break inside the near-degenerate window: largest |leading nonzero
  // amplitude|, earliest eigenvector on ties.
  Eigen::Index pick = 0;
  double best = -1.0;
  for (Eigen::Index k = 0; k < count; ++k) {
    const StateVector v = es.vectors.col(k);
    const double a = std::abs(v(leading_amplitude(v)));
    if (a > best + 1e-12) {
      best = a;
      pick = k;
    }
  }
  StateVector v = es.vectors.col(pick);
  fix_phase(v);
  const double gap = es.values.size() > 1 ? es.values(1) - e0
                                          : std::numeric_limits<double>::infinity();
  return GroundState{std::move(v), e0, gap, count > 1};
}

std::vector<StateVector> ground_state_multiplet(const HamiltonianModel& model,
                                                const std::vector<double>& lambda,
                                                double window) {
  const auto es = hermitian_eig(model.evaluate(lambda));
  std::vector<StateVector> out;
  for (Eigen::Index k = 0; k < es.values.size(); ++k) {
    if (es.values(k) - es.values(0) >= window) break;
    StateVector v = es.vectors.col(k);
    fix_phase(v);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qmor
