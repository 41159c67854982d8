#include <benchmark/benchmark.h>

#include "hilbgen/eta.hpp"
#include "hilbgen/fock.hpp"
#include "hilbgen/hilb.hpp"
#include "hilbgen/relations.hpp"
#include "hilbgen/surface.hpp"

using namespace hilbgen;

static void BM_SeriesMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Series a = eta_power(-24, n).series, b = eta_power(24, n).series;
  for (auto _ : state) benchmark::DoNotOptimize(ps_mul(a, b));
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(200);

static void BM_EtaPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta_power(-24, n));
}
BENCHMARK(BM_EtaPower)->Arg(50)->Arg(200);

static void BM_HilbertPoincare(benchmark::State& state) {
  auto k3 = surface_fixture("k3").topology;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_poincare(k3, n));
}
BENCHMARK(BM_HilbertPoincare)->Arg(10)->Arg(50);

// One creation and one annihilation per basis state of weight <= 3.
static void BM_FockApply(benchmark::State& state) {
  FockSpace space(*surface_fixture("k3").model);
  auto basis = space.basis_up_to(3);
  const std::size_t pt = space.model().dim() - 1;
  for (auto _ : state) {
    FockState out;
    for (const auto& m : basis) {
      space.apply_basis_op(-1, pt, m, Rational(1), out);
      space.apply_basis_op(1, 0, m, Rational(1), out);
    }
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size()) * 2);
}
BENCHMARK(BM_FockApply);

static void BM_HeisenbergCheck(benchmark::State& state) {
  FockSpace space(*surface_fixture("p2").model);
  CheckOptions o;
  o.weight_bound = 4;
  o.level_bound = 3;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_heisenberg_relations(space, o));
}
BENCHMARK(BM_HeisenbergCheck);

BENCHMARK_MAIN();
