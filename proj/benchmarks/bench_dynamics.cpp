#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "qmor/dynamics.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"
#include "qmor/sampling.hpp"

namespace {

std::vector<double> grid() {
  std::vector<double> times(100);
  for (std::size_t k = 0; k < times.size(); ++k) {
    times[k] = 10.0 * static_cast<double>(k) / 99.0;
  }
  return times;
}

// Full-order propagation: one d x d eigendecomposition plus per-time phases.
void BM_PropagateFull(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto model = qmor::random_tfim_open(n);
  std::vector<double> lambda(model.parameters(), 0.8);
  const auto psi0 = qmor::product_state(std::string(n, '+'));
  const auto times = grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmor::propagate_full(model, lambda, psi0, times));
  }
}
BENCHMARK(BM_PropagateFull)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

// Same trajectory in the r = 2^(n-1) invariant subspace.
void BM_PropagateReduced(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto model = qmor::random_tfim_open(n);
  const std::string labels(n, '+');
  const auto basis = qmor::burnside_basis_pauli(model.support_paulis());
  const auto sel = qmor::gramian_select(basis, labels);
  std::vector<qmor::BinaryPauli> picked;
  for (std::size_t idx : sel.selected) picked.push_back(basis.pauli_elements[idx]);
  const auto rm = qmor::reduced_model_pauli(model, picked, labels);
  std::vector<double> lambda(model.parameters(), 0.8);
  const auto times = grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmor::propagate_reduced(rm, lambda, times));
  }
  state.counters["r"] = static_cast<double>(rm.r());
}
BENCHMARK(BM_PropagateReduced)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_CompareEndToEnd(benchmark::State& state) {
  const auto model = qmor::random_tfim_open(6);
  const auto psi0 = qmor::product_state("++++++");
  const auto basis = qmor::burnside_basis_pauli(model.support_paulis());
  const auto map = qmor::orbit_basis(basis, psi0);
  std::vector<double> lambda(model.parameters(), 1.1);
  qmor::PauliSum sx(6);
  for (std::uint32_t j = 0; j < 6; ++j) {
    std::string label(6, 'I');
    label[j] = 'X';
    sx.add(1.0, qmor::BinaryPauli::from_label(label));
  }
  const Eigen::MatrixXcd obs = sx.dense();
  const auto times = grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qmor::compare(model, map, lambda, psi0, obs, times));
  }
}
BENCHMARK(BM_CompareEndToEnd)->Unit(benchmark::kMillisecond);

void BM_SnapshotReduction(benchmark::State& state) {
  const auto model = qmor::random_tfim_open(4);
  const auto psi0 = qmor::product_state("++++");
  std::vector<qmor::ScheduleEntry> schedule(2);
  schedule[0].lambda = {0.9, -1.1, 0.6, 1.3, -0.2, 0.8, 1.0};
  schedule[0].times = qmor::random_times(10, 0.0, 10.0, 11);
  schedule[1].lambda = {-0.4, 0.3, 1.7, -0.9, 1.2, 0.1, -1.5};
  schedule[1].times = qmor::random_times(10, 0.0, 10.0, 12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmor::snapshot_reduction(model, psi0, schedule));
  }
}
BENCHMARK(BM_SnapshotReduction)->Unit(benchmark::kMillisecond);

}  // namespace
