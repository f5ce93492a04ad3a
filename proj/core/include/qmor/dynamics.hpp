#pragma once

#include <string>
#include <vector>

#include "qmor/linalg.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"

namespace qmor {

// One observable trace: expectation values along a time grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<double> values;
  std::string model_kind;  // "full", "reduced(r)", or "truncated(r)"
};

// States exp(-i H(lambda) t) psi0 column per time.
ComplexMatrix propagate_full(const HamiltonianModel& model,
                             const std::vector<double>& lambda,
                             const StateVector& psi0,
                             const std::vector<double>& times);

// Reduced-coordinate states exp(-i Hhat(lambda) t) v0.
ComplexMatrix propagate_reduced(const ReducedModel& rm,
                                const std::vector<double>& lambda,
                                const std::vector<double>& times);

ComplexMatrix project_observable(const ComplexMatrix& obs, const ReductionMap& map);

// <psi| O |psi> per column; imaginary parts (fp noise for Hermitian O) are
// dropped after a sanity bound.
std::vector<double> observable_trace(const ComplexMatrix& states, const ComplexMatrix& obs);

struct CompareResult {
  Trajectory full;
  Trajectory reduced;
  double max_abs_error = 0.0;
};

// Runs both models on the same grid and reports the worst pointwise gap.
// `truncate` drops that many trailing map columns first (an intentionally
// broken subspace for error studies); 0 compares the faithful reduction.
CompareResult compare(const HamiltonianModel& model, const ReductionMap& map,
                      const std::vector<double>& lambda, const StateVector& psi0,
                      const ComplexMatrix& obs, const std::vector<double>& times,
                      Eigen::Index truncate = 0);

}  // namespace qmor
