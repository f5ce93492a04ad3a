#pragma once

#include <cstdint>
#include <vector>

#include "qmor/linalg.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"

namespace qmor {

namespace defaults {
// Relative clustering width for deciding two eigenvalues coincide.
inline constexpr double eig_cluster_tol = 1e-9;
// Projection norm below which an eigenspace counts as orthogonal to psi0.
inline constexpr double eigenspace_tol = 1e-9;
// How close Delta_t * (mu_k - mu_j) may come to a multiple of 2*pi before a
// uniform schedule aliases.
inline constexpr double uniform_phase_tol = 1e-9;
}  // namespace defaults

// Distinct eigenvalues (clustered within eig_cluster_tol * spectral radius)
// whose eigenspaces have projection of psi0 above tol.  One representative
// value per cluster.
std::vector<double> relevant_eigenvalues(const Eigensystem& es, const StateVector& psi0,
                                         double tol = defaults::eigenspace_tol);

// Dimension of the smallest evolution-invariant subspace of H containing
// psi0: the number of eigenspaces psi0 actually touches.
std::size_t cyclic_dimension(const ComplexMatrix& h, const StateVector& psi0,
                             double tol = defaults::eigenspace_tol);

// Trajectory snapshots exp(-i H(lambda) t) psi0 for each listed time.
ComplexMatrix snapshots(const HamiltonianModel& model, const std::vector<double>& lambda,
                        const StateVector& psi0, const std::vector<double>& times);

std::size_t snapshot_span_dim(const ComplexMatrix& states,
                              double tol = defaults::rank_tol);

// False iff some pair of relevant eigenvalues satisfies
// dt * (mu_k - mu_j) = 0 (mod 2*pi) within the phase tolerance, which would
// make uniformly spaced snapshots revisit the same phases and under-span.
bool uniform_step_valid(const std::vector<double>& relevant_eigs, double dt,
                        double phase_tol = defaults::uniform_phase_tol);

// One schedule entry: a parameter point and the snapshot times taken there.
struct ScheduleEntry {
  std::vector<double> lambda;
  std::vector<double> times;
  bool uniform = false;  // times came from a uniform grid (alias check applies)
  double dt = 0.0;
};

struct SnapshotReduction {
  ReductionMap map;
  double residual = 0.0;  // invariance residual of the assembled map
  bool residual_pass = false;
  std::vector<std::size_t> cyclic_dims;  // Z(H(lambda), psi0) per entry
  std::vector<bool> uniform_valid;       // alias check per entry (true if n/a)
};

// Pools snapshots across all schedule entries, selects an independent subset
// and orthonormalizes.  Heuristic by nature: the result is checked (not
// assumed) to be invariant, and the verdict is reported.
SnapshotReduction snapshot_reduction(const HamiltonianModel& model,
                                     const StateVector& psi0,
                                     const std::vector<ScheduleEntry>& schedule,
                                     double tol = defaults::rank_tol,
                                     double residual_tol = 1e-8);

// Deterministic uniform draw on [lo, hi): identical sequences for a seed on
// every platform, unlike std::uniform_real_distribution.
class UniformSampler {
 public:
  explicit UniformSampler(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}
  double next(double lo, double hi);

 private:
  std::uint64_t next_raw();
  std::uint64_t state_;
};

std::vector<double> random_times(std::size_t count, double lo, double hi,
                                 std::uint64_t seed);
std::vector<double> uniform_times(double start, double dt, std::size_t count);

}  // namespace qmor
