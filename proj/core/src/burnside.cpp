#include "qmor/burnside.hpp"

#include <stdexcept>

#include "qmor/gf2.hpp"

namespace qmor {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

Eigen::Map<const VectorXcd> vec(const MatrixXcd& m) {
  return Eigen::Map<const VectorXcd>(m.data(), m.size());
}

// Incremental orthonormal span of vectorized monomials.
class SpanBasis {
 public:
  explicit SpanBasis(double tol) : tol_(tol) {}

  std::size_t size() const { return q_.size(); }

  // Residual test against the current span; grows the span on admission.
  // The residual is taken on the input as given: feed products of unit-norm
  // factors, so a near-cancelling product -- whose content is mostly
  // roundoff -- falls below the tolerance instead of being normalized up
  // into a spurious direction.
  bool admit(const MatrixXcd& m) {
    VectorXcd r = vec(m);
    project_out(r);
    if (r.norm() <= tol_) return false;
    project_out(r);  // second pass keeps the span numerically orthonormal
    r /= r.norm();
    q_.push_back(std::move(r));
    return true;
  }

 private:
  void project_out(VectorXcd& r) const {
    for (const auto& q : q_) r.noalias() -= q * q.dot(r);
  }

  double tol_;
  std::vector<VectorXcd> q_;
};

std::size_t check_square(const std::vector<MatrixXcd>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient set");
  const Eigen::Index d = coeffs.front().rows();
  for (const auto& c : coeffs) {
    if (c.rows() != d || c.cols() != d) {
      throw std::invalid_argument("coefficient matrices must be square and equal size");
    }
  }
  return static_cast<std::size_t>(d);
}

std::vector<MatrixXcd> normalized_generators(const std::vector<MatrixXcd>& coeffs) {
  std::vector<MatrixXcd> gens;
  for (const auto& c : coeffs) {
    const double norm = c.norm();
    if (norm > 0.0) gens.push_back(c / norm);
  }
  return gens;
}

BurnsideBasis dense_span_check(const std::vector<MatrixXcd>& coeffs,
                               const BurnsideOptions& opts) {
  const std::size_t d = check_square(coeffs);
  const auto gens = normalized_generators(coeffs);

  BurnsideBasis basis;
  basis.mode = BurnsideBasis::Mode::dense;
  basis.dim = d;
  SpanBasis span(opts.tol);

  MatrixXcd eye = MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d));
  span.admit(eye);
  basis.dense_elements.push_back(std::move(eye));

  const std::size_t bound = paz_layer_bound(d);
  std::size_t frontier_begin = 0;
  for (std::size_t layer = 1; layer <= bound + 1; ++layer) {
    const std::size_t frontier_end = basis.dense_elements.size();
    if (frontier_begin == frontier_end || span.size() >= d * d) break;
    for (std::size_t w = frontier_begin; w < frontier_end; ++w) {
      for (const auto& g : gens) {
        MatrixXcd cand = basis.dense_elements[w] * g;
        if (span.admit(cand)) {
          // Admission guarantees the raw residual, hence the norm, exceeds
          // the tolerance; renormalize only now so the recurrence keeps
          // multiplying unit-norm factors.
          cand /= cand.norm();
          basis.dense_elements.push_back(std::move(cand));
          basis.layers_used = static_cast<int>(layer);
        }
      }
    }
    frontier_begin = frontier_end;
  }
  if (static_cast<std::size_t>(basis.layers_used) > bound) {
    throw std::runtime_error("monomial span failed to stabilize within the layer bound");
  }
  return basis;
}

BurnsideBasis dense_paz_bound(const std::vector<MatrixXcd>& coeffs,
                              const BurnsideOptions& opts) {
  const std::size_t d = check_square(coeffs);
  const auto gens = normalized_generators(coeffs);
  const std::size_t bound = paz_layer_bound(d);

  // Every monomial of every layer, no per-candidate pruning.  The recurrence
  // multiplies unit-normalized factors; raw_norm records each product's
  // as-computed scale so the final selection judges honest residuals.
  std::vector<MatrixXcd> monomials;
  std::vector<double> raw_norm;
  std::vector<int> degree;
  monomials.push_back(MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  raw_norm.push_back(1.0);
  degree.push_back(0);

  SpanBasis span(opts.tol);
  span.admit(monomials.front());

  std::size_t frontier_begin = 0;
  for (std::size_t layer = 1; layer <= bound; ++layer) {
    const std::size_t frontier_end = monomials.size();
    const std::size_t rank_before = span.size();
    for (std::size_t w = frontier_begin; w < frontier_end; ++w) {
      for (const auto& g : gens) {
        MatrixXcd cand = monomials[w] * g;
        const double norm = cand.norm();
        span.admit(cand);
        if (norm > opts.tol) {
          cand /= norm;
        } else {
          // The whole product sits at roundoff scale: it is numerically zero,
          // and parking it as exact zero keeps its descendants from breeding
          // noise directions.
          cand.setZero();
        }
        monomials.push_back(std::move(cand));
        raw_norm.push_back(norm);
        degree.push_back(static_cast<int>(layer));
        if (monomials.size() > opts.max_monomials) {
          throw std::runtime_error("monomial fan-out exceeded max_monomials; "
                                   "use the span_check strategy");
        }
      }
    }
    frontier_begin = frontier_end;
    if (span.size() == rank_before || span.size() >= d * d) break;
  }

  // Post-filter the full collection down to a maximal independent subset,
  // each column at its as-computed product scale.
  MatrixXcd stacked(d * d, monomials.size());
  for (std::size_t j = 0; j < monomials.size(); ++j) {
    stacked.col(j) = vec(monomials[j]) * raw_norm[j];
  }
  const auto picked = select_independent_columns(stacked, opts.tol);

  BurnsideBasis basis;
  basis.mode = BurnsideBasis::Mode::dense;
  basis.dim = d;
  for (const auto j : picked) {
    basis.dense_elements.push_back(monomials[j]);
    basis.layers_used = std::max(basis.layers_used, degree[j]);
  }
  return basis;
}

}  // namespace

std::size_t paz_layer_bound(std::size_t d) {
  return (d * d + 2 + 2) / 3;  // ceil((d^2 + 2) / 3)
}

BurnsideBasis burnside_basis_dense(const std::vector<MatrixXcd>& coeffs,
                                   const BurnsideOptions& opts) {
  switch (opts.strategy) {
    case DenseStrategy::span_check: return dense_span_check(coeffs, opts);
    case DenseStrategy::paz_bound: return dense_paz_bound(coeffs, opts);
  }
  throw std::logic_error("unreachable");
}

BurnsideBasis burnside_basis_pauli(const std::vector<BinaryPauli>& support,
                                   const GroupOptions& opts) {
  BurnsideBasis basis;
  basis.mode = BurnsideBasis::Mode::pauli;
  basis.pauli_elements = generate_group_graycode(support, opts);
  basis.dim = std::size_t{1} << basis.pauli_elements.front().n;
  return basis;
}

CertificateReport certify(const HamiltonianModel& model, const CertifyOptions& opts) {
  CertificateReport report;
  report.dim_full = model.dim() * model.dim();

  if (model.pauli_representable()) {
    const std::uint32_t n = model.sites().value();
    const auto support = model.support_paulis();
    if (pauli_sufficiency_count(support.size(), n)) {
      report.verdict = CertificateReport::Verdict::reducible;
      report.method = "count";
      return report;
    }
    const std::size_t rank = gf2_rank(symplectic_matrix(support));
    if (model.pure_pauli()) {
      // Group size is exactly 2^rank, and for pure models the algebra is the
      // group span: the rank test decides both directions.
      report.dim_algebra = std::size_t{1} << rank;
      report.method = "rank";
      report.verdict = rank < 2 * static_cast<std::size_t>(n)
                           ? CertificateReport::Verdict::reducible
                           : CertificateReport::Verdict::irreducible;
      return report;
    }
    if (rank < 2 * static_cast<std::size_t>(n)) {
      report.verdict = CertificateReport::Verdict::reducible;
      report.method = "rank";
      return report;
    }
  }

  if (model.dim() > opts.max_dense_dim) {
    report.verdict = CertificateReport::Verdict::unknown;
    report.method = "burnside";
    return report;
  }
  const auto basis = burnside_basis_dense(model.coeff_set(), opts.burnside);
  report.dim_algebra = basis.size();
  report.method = "burnside";
  report.layers_used = basis.layers_used;
  report.verdict = basis.size() < report.dim_full
                       ? CertificateReport::Verdict::reducible
                       : CertificateReport::Verdict::irreducible;
  return report;
}

}  // namespace qmor
