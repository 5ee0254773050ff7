#include "octa/algebra.hpp"
#include "octa/inner.hpp"

#include <benchmark/benchmark.h>

using namespace octa;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_intertwine(benchmark::State& st) {
  const auto box = sector_box(-3, 3);
  const GradedOp b = graded(Family::B, Ladder::lowering);
  for (auto _ : st) benchmark::DoNotOptimize(intertwine_failures(b, box, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(box.size()));
}

void BM_casimir(benchmark::State& st) {
  const auto box = sector_box(-2, 2);
  for (auto _ : st)
    benchmark::DoNotOptimize(casimir_failures(CasimirKind::so6_cass, box, make_rational(15, 4), exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<long>(box.size()));
}

void BM_structure_table(benchmark::State& st) {
  const auto box = sector_box(-1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(structure_table(box, exec_of(st)));
}

void BM_gram(benchmark::State& st) {
  const IurStates s = iur_states(Algebra::so6, {3});
  for (auto _ : st) benchmark::DoNotOptimize(gram(s.states, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_intertwine)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_casimir)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_structure_table)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
