#include <benchmark/benchmark.h>

#include "boxdom/bounds.hpp"
#include "boxdom/decomposition.hpp"
#include "boxdom/families.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/harness.hpp"
#include "boxdom/labeling.hpp"
#include "boxdom/product.hpp"
#include "boxdom/rng.hpp"
#include "boxdom/solver.hpp"

namespace {

using namespace boxdom;

// Exact gamma of the n x n grid, the classic branch-and-bound stress case.
void BM_GridGamma(benchmark::State& state) {
  int n = int(state.range(0));
  ProductGraph pr(path_graph(n), path_graph(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(domination_number(pr.base()));
  }
}
BENCHMARK(BM_GridGamma)->DenseRange(3, 7);

void BM_PowerReport(benchmark::State& state) {
  Graph g = cycle_graph(int(state.range(0)));
  for (auto _ : state) {
    PowerReport rep = power_report(g);
    benchmark::DoNotOptimize(rep.power_open);
  }
}
BENCHMARK(BM_PowerReport)->Arg(6)->Arg(9)->Arg(12);

// Decomposition plus all three labeling stages on C_n box C_n, gamma and
// the dominating set precomputed outside the loop.
void BM_LabelingPipeline(benchmark::State& state) {
  int n = int(state.range(0));
  Graph g = cycle_graph(n), h = cycle_graph(n);
  ProductGraph pr(g, h);
  PowerReport prep = power_report(g);
  DominatingSet d = min_dominating_set(pr.base());
  LabelingOptions opt;
  for (auto _ : state) {
    CellDecomposition dec = decompose(g, prep.witness_set.to_vector());
    Labeling lab = make_labeling(pr, dec, d, d.count());
    run_labelings(lab, opt);
    benchmark::DoNotOptimize(lab.passes);
  }
}
BENCHMARK(BM_LabelingPipeline)->Arg(4)->Arg(5)->Arg(6);

// The whole per-instance pipeline the sweep runs, including both exact
// solves and every certificate check.
void BM_RunInstance(benchmark::State& state) {
  Graph g = cycle_graph(int(state.range(0)));
  Graph h = path_graph(4);
  RunOptions opt;
  for (auto _ : state) {
    InstanceRecord rec = run_instance(g, h, opt);
    benchmark::DoNotOptimize(rec.status);
  }
}
BENCHMARK(BM_RunInstance)->Arg(4)->Arg(6)->Arg(8);

void BM_Graph6RoundTrip(benchmark::State& state) {
  Graph g = gnp_graph(int(state.range(0)), Rat(1, 3), 12345);
  for (auto _ : state) {
    Graph back = parse_graph6(emit_graph6(g));
    benchmark::DoNotOptimize(back.order());
  }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(32)->Arg(64)->Arg(128);

void BM_Prop1Oracle(benchmark::State& state) {
  int n = int(state.range(0));
  for (auto _ : state) {
    Prop1Result r = prop1_oracle(n);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_Prop1Oracle)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
