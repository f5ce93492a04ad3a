#include "qmor/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmor {

std::vector<double> relevant_eigenvalues(const Eigensystem& es, const StateVector& psi0,
                                         double tol) {
  if (es.vectors.rows() != psi0.size()) {
    throw std::invalid_argument("state dimension does not match eigensystem");
  }
  const Eigen::Index d = es.values.size();
  const double radius = std::max(std::abs(es.values(0)), std::abs(es.values(d - 1)));
  const double width = defaults::eig_cluster_tol * std::max(radius, 1e-300);
  const Eigen::VectorXcd overlaps = es.vectors.adjoint() * psi0;

  std::vector<double> out;
  Eigen::Index lo = 0;
  while (lo < d) {
    Eigen::Index hi = lo + 1;
    while (hi < d && es.values(hi) - es.values(hi - 1) <= width) ++hi;
    const double weight = overlaps.segment(lo, hi - lo).norm();
    if (weight > tol) out.push_back(es.values(lo));
    lo = hi;
  }
  return out;
}

std::size_t cyclic_dimension(const ComplexMatrix& h, const StateVector& psi0,
                             double tol) {
  return relevant_eigenvalues(hermitian_eig(h), psi0, tol).size();
}

ComplexMatrix snapshots(const HamiltonianModel& model, const std::vector<double>& lambda,
                        const StateVector& psi0, const std::vector<double>& times) {
  const auto es = hermitian_eig(model.evaluate(lambda));
  ComplexMatrix out(psi0.size(), times.size());
  for (std::size_t k = 0; k < times.size(); ++k) {
    out.col(k) = evolve(es, psi0, times[k]);
  }
  return out;
}

std::size_t snapshot_span_dim(const ComplexMatrix& states, double tol) {
  return numeric_rank(states, tol);
}

bool uniform_step_valid(const std::vector<double>& relevant_eigs, double dt,
                        double phase_tol) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t a = 0; a < relevant_eigs.size(); ++a) {
    for (std::size_t b = a + 1; b < relevant_eigs.size(); ++b) {
      const double theta = dt * (relevant_eigs[b] - relevant_eigs[a]);
      const double frac = theta - two_pi * std::round(theta / two_pi);
      if (std::abs(frac) < phase_tol) return false;
    }
  }
  return true;
}

SnapshotReduction snapshot_reduction(const HamiltonianModel& model,
                                     const StateVector& psi0,
                                     const std::vector<ScheduleEntry>& schedule,
                                     double tol, double residual_tol) {
  if (schedule.empty()) throw std::invalid_argument("empty snapshot schedule");
  SnapshotReduction out;

  std::size_t total = 0;
  for (const auto& entry : schedule) total += entry.times.size();
  ComplexMatrix pool(psi0.size(), total + 1);
  pool.col(0) = psi0;  // contained by construction even if no entry lists t=0
  std::size_t col = 1;
  for (const auto& entry : schedule) {
    const auto es = hermitian_eig(model.evaluate(entry.lambda));
    const auto relevant = relevant_eigenvalues(es, psi0);
    out.cyclic_dims.push_back(relevant.size());
    out.uniform_valid.push_back(!entry.uniform ||
                                uniform_step_valid(relevant, entry.dt));
    for (const double t : entry.times) {
      pool.col(col++) = evolve(es, psi0, t);
    }
  }

  const auto picked = select_independent_columns(pool, tol);
  ComplexMatrix chosen(psi0.size(), picked.size());
  for (std::size_t k = 0; k < picked.size(); ++k) chosen.col(k) = pool.col(picked[k]);
  out.map = ReductionMap{orthonormal_columns(chosen), ReductionMap::Source::snapshots};
  out.residual = invariance_residual(model, out.map.phi);
  out.residual_pass = out.residual <= residual_tol;
  return out;
}

std::uint64_t UniformSampler::next_raw() {
  // splitmix64: tiny, seed-stable, and identical everywhere.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double UniformSampler::next(double lo, double hi) {
  const double u = static_cast<double>(next_raw() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::vector<double> random_times(std::size_t count, double lo, double hi,
                                 std::uint64_t seed) {
  UniformSampler sampler(seed);
  std::vector<double> out(count);
  for (auto& t : out) t = sampler.next(lo, hi);
  return out;
}

std::vector<double> uniform_times(double start, double dt, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = start + dt * static_cast<double>(k);
  return out;
}

}  // namespace qmor
