#include <benchmark/benchmark.h>

#include <memory>

#include "cherednik/lmodule.hpp"
#include "cherednik/params.hpp"
#include "cherednik/rep.hpp"
#include "cherednik/resolutions.hpp"

using namespace cherednik;

namespace {

std::shared_ptr<VermaEngine<FiniteField>> engine(int m, int r, int n, std::uint32_t p, const std::string& tau) {
  const GroupSpec G(m, r, n);
  const auto F = FiniteField::with_roots(p, m, 1, kGenericFieldSize);
  return std::make_shared<VermaEngine<FiniteField>>(G, builtin_rep(G, tau, F), F, specialized_params(G, F, 0, 1));
}

void BM_ComputeL_Dihedral(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto L = compute_L(engine(m, m, 2, 11, "trivial"));
    benchmark::DoNotOptimize(L.hilbert());
  }
}
BENCHMARK(BM_ComputeL_Dihedral)->Arg(3)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ComputeL_Rank3Gamma0(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto L = compute_L(engine(m, m, 3, 11, "gamma:0"));
    benchmark::DoNotOptimize(L.hilbert());
  }
}
BENCHMARK(BM_ComputeL_Rank3Gamma0)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ComputeL_G225(benchmark::State& state) {
  for (auto _ : state) {
    auto L = compute_L(engine(2, 2, 5, 5, "trivial"));
    benchmark::DoNotOptimize(L.hilbert());
  }
}
BENCHMARK(BM_ComputeL_G225)->Unit(benchmark::kMillisecond);

void BM_DunklTables(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto eng = engine(4, 4, 3, 13, "gamma:0");
    benchmark::DoNotOptimize(eng->dunkl_columns(d, 0).size());
  }
}
BENCHMARK(BM_DunklTables)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GradedBetti(benchmark::State& state) {
  const auto L = compute_L(engine(8, 8, 2, 17, "rho:2"));
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(module_view(L), 20).ranks());
}
BENCHMARK(BM_GradedBetti)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
