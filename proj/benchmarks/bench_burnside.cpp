#include <benchmark/benchmark.h>

#include <string>

#include "qmor/burnside.hpp"
#include "qmor/model.hpp"
#include "qmor/reduction.hpp"

namespace {

void BM_DenseBasisCollective(benchmark::State& state) {
  const auto model =
      qmor::collective_rotation(static_cast<std::uint32_t>(state.range(0)));
  const auto coeffs = model.coeff_set();
  std::size_t size = 0;
  for (auto _ : state) {
    auto basis = qmor::burnside_basis_dense(coeffs);
    size = basis.size();
    benchmark::DoNotOptimize(basis);
  }
  state.counters["basis"] = static_cast<double>(size);
}
BENCHMARK(BM_DenseBasisCollective)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DenseBasisIsing(benchmark::State& state) {
  const auto model =
      qmor::tfim_periodic(static_cast<std::uint32_t>(state.range(0)));
  const auto coeffs = model.coeff_set();
  std::size_t size = 0;
  for (auto _ : state) {
    auto basis = qmor::burnside_basis_dense(coeffs);
    size = basis.size();
    benchmark::DoNotOptimize(basis);
  }
  state.counters["basis"] = static_cast<double>(size);
}
BENCHMARK(BM_DenseBasisIsing)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PauliBasis(benchmark::State& state) {
  const auto model =
      qmor::random_tfim_open(static_cast<std::uint32_t>(state.range(0)));
  const auto support = model.support_paulis();
  for (auto _ : state) {
    auto basis = qmor::burnside_basis_pauli(support);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_PauliBasis)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

// Independence filtering over the whole group with no length-d vectors in
// sight; the span of the result is 2^(n-1)-dimensional.
void BM_GramianSelect(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto model = qmor::random_tfim_open(n);
  const auto basis = qmor::burnside_basis_pauli(model.support_paulis());
  const std::string labels(n, '+');
  Eigen::Index r = 0;
  for (auto _ : state) {
    auto sel = qmor::gramian_select(basis, labels);
    r = sel.map.r();
    benchmark::DoNotOptimize(sel);
  }
  state.counters["r"] = static_cast<double>(r);
}
BENCHMARK(BM_GramianSelect)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OrbitDense(benchmark::State& state) {
  const auto model = qmor::collective_rotation(4);
  const auto basis = qmor::burnside_basis_dense(model.coeff_set());
  const auto psi0 = qmor::product_state("0000");
  for (auto _ : state) {
    auto map = qmor::orbit_basis(basis, psi0);
    benchmark::DoNotOptimize(map);
  }
}
BENCHMARK(BM_OrbitDense);

void BM_Certify(benchmark::State& state) {
  const auto model =
      qmor::tfim_periodic(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmor::certify(model));
  }
}
BENCHMARK(BM_Certify)->Arg(4)->Arg(8)->Arg(12);

}  // namespace
