#include "qmor/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace qmor {

ComplexMatrix propagate_full(const HamiltonianModel& model,
                             const std::vector<double>& lambda,
                             const StateVector& psi0,
                             const std::vector<double>& times) {
  const auto es = hermitian_eig(model.evaluate(lambda));
  ComplexMatrix out(psi0.size(), times.size());
  for (std::size_t k = 0; k < times.size(); ++k) out.col(k) = evolve(es, psi0, times[k]);
  return out;
}

ComplexMatrix propagate_reduced(const ReducedModel& rm,
                                const std::vector<double>& lambda,
                                const std::vector<double>& times) {
  const auto es = hermitian_eig(rm.evaluate(lambda));
  ComplexMatrix out(rm.v0.size(), times.size());
  for (std::size_t k = 0; k < times.size(); ++k) out.col(k) = evolve(es, rm.v0, times[k]);
  return out;
}

ComplexMatrix project_observable(const ComplexMatrix& obs, const ReductionMap& map) {
  if (obs.rows() != map.d() || obs.cols() != map.d()) {
    throw std::invalid_argument("observable dimension does not match map");
  }
  ComplexMatrix p = map.phi.adjoint() * (obs * map.phi);
  return ((p + p.adjoint()) / 2.0).eval();
}

std::vector<double> observable_trace(const ComplexMatrix& states,
                                     const ComplexMatrix& obs) {
  if (obs.rows() != states.rows()) {
    throw std::invalid_argument("observable dimension does not match states");
  }
  std::vector<double> out(states.cols());
  for (Eigen::Index k = 0; k < states.cols(); ++k) {
    const Complex v = states.col(k).dot(obs * states.col(k));
    if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v.real()))) {
      throw std::runtime_error("observable expectation has a non-real part; "
                               "is the observable Hermitian?");
    }
    out[k] = v.real();
  }
  return out;
}

CompareResult compare(const HamiltonianModel& model, const ReductionMap& map,
                      const std::vector<double>& lambda, const StateVector& psi0,
                      const ComplexMatrix& obs, const std::vector<double>& times,
                      Eigen::Index truncate) {
  const ReductionMap used = truncate > 0 ? truncate_map(map, truncate) : map;
  const ReducedModel rm = reduced_model(model, used, psi0);

  CompareResult out;
  out.full.times = times;
  out.full.model_kind = "full";
  out.full.values = observable_trace(propagate_full(model, lambda, psi0, times), obs);

  out.reduced.times = times;
  out.reduced.model_kind =
      (truncate > 0 ? "truncated(" : "reduced(") + std::to_string(used.r()) + ")";
  out.reduced.values = observable_trace(propagate_reduced(rm, lambda, times),
                                        project_observable(obs, used));

  for (std::size_t k = 0; k < times.size(); ++k) {
    out.max_abs_error =
        std::max(out.max_abs_error, std::abs(out.full.values[k] - out.reduced.values[k]));
  }
  return out;
}

}  // namespace qmor
