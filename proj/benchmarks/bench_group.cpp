#include <benchmark/benchmark.h>

#include <vector>

#include "qmor/gf2.hpp"
#include "qmor/group.hpp"
#include "qmor/pauli.hpp"

namespace {

// Open-chain transverse-field support: n single-site X strings and n-1
// nearest-neighbour ZZ strings, symplectically independent, so the generated
// subgroup has 2^(2n-1) elements.
std::vector<qmor::BinaryPauli> chain_support(std::uint32_t n) {
  std::vector<qmor::BinaryPauli> gens;
  for (std::uint32_t j = 0; j < n; ++j) {
    std::string label(n, 'I');
    label[j] = 'X';
    gens.push_back(qmor::BinaryPauli::from_label(label));
  }
  for (std::uint32_t j = 0; j + 1 < n; ++j) {
    std::string label(n, 'I');
    label[j] = 'Z';
    label[j + 1] = 'Z';
    gens.push_back(qmor::BinaryPauli::from_label(label));
  }
  return gens;
}

void BM_GroupGraycode(benchmark::State& state) {
  const auto gens = chain_support(static_cast<std::uint32_t>(state.range(0)));
  std::size_t elements = 0;
  for (auto _ : state) {
    auto group = qmor::generate_group_graycode(gens);
    elements = group.size();
    benchmark::DoNotOptimize(group);
  }
  state.counters["elements"] = static_cast<double>(elements);
}
BENCHMARK(BM_GroupGraycode)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GroupLayered(benchmark::State& state) {
  const auto gens = chain_support(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    auto group = qmor::generate_group_layered(gens);
    benchmark::DoNotOptimize(group);
  }
}
BENCHMARK(BM_GroupLayered)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SymplecticRank(benchmark::State& state) {
  const auto gens = chain_support(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qmor::gf2_rank(qmor::symplectic_matrix(gens)));
  }
}
BENCHMARK(BM_SymplecticRank)->Arg(8)->Arg(14)->Arg(20);

}  // namespace
