// Serial reference against the OpenMP path for the sample-batch kernels.
#include <benchmark/benchmark.h>

#include "eirq/axioms.hpp"
#include "eirq/carriers.hpp"
#include "eirq/division.hpp"
#include "eirq/emergent.hpp"

namespace {

using eirq::Execution;

Execution exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Execution::serial : Execution::parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "openmp"); }

void BM_AxiomsHeisenberg(benchmark::State& s) {
  auto h = eirq::make_heisenberg(0.5);
  for (auto _ : s) benchmark::DoNotOptimize(eirq::check_irq_axioms(*h, 1, 200, 1.0, 1e-9, exec_of(s)));
  label(s);
}

void BM_AxiomsEngel(benchmark::State& s) {
  auto g = eirq::make_engel(0.5);
  for (auto _ : s) benchmark::DoNotOptimize(eirq::check_irq_axioms(*g, 1, 100, 1.0, 1e-9, exec_of(s)));
  label(s);
}

void BM_UniformityHeisenberg(benchmark::State& s) {
  auto h = eirq::make_heisenberg(0.5);
  for (auto _ : s)
    benchmark::DoNotOptimize(eirq::audit_uniformity(*h, eirq::LimitKind::sum, 1, 100, 1.0, {}, exec_of(s)));
  label(s);
}

void BM_TangentGroupHeisenberg(benchmark::State& s) {
  auto h = eirq::make_heisenberg(0.5);
  for (auto _ : s)
    benchmark::DoNotOptimize(eirq::verify_tangent_group(*h, h->base_point(), {}, 1, 20, 1.0, 1e-7, exec_of(s)));
  label(s);
}

void BM_SymmetricHyperbolic(benchmark::State& s) {
  auto hyp = eirq::make_hyperbolic(0.5);
  const auto m = eirq::DivisionMethod::closed_form();
  for (auto _ : s)
    benchmark::DoNotOptimize(eirq::check_symmetric_extras(*hyp, {}, 1, 20, 1.0, 1e-8, m, {}, exec_of(s)));
  label(s);
}

BENCHMARK(BM_AxiomsHeisenberg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomsEngel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UniformityHeisenberg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TangentGroupHeisenberg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymmetricHyperbolic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
