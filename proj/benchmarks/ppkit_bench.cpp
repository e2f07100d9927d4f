// Timings for the main computations over k[t]/(t^n) with k = F_2.

#include <benchmark/benchmark.h>

#include "ppkit/construct.hpp"
#include "ppkit/context.hpp"
#include "ppkit/formula.hpp"
#include "ppkit/lattice.hpp"
#include "ppkit/pp.hpp"
#include "ppkit/scalars.hpp"
#include "ppkit/tensor.hpp"

namespace {

using namespace ppkit;

AlgebraPtr truncated(std::size_t n) { return truncatedPolynomialAlgebra(Field::make(2), n); }

// The simple module k, on which t acts as zero.
ModulePtr simple(const AlgebraPtr& alg, Side side) {
  std::vector<Matrix> actions(alg->dim(), Matrix(1, 1));
  actions[0] = Matrix::identity(1);
  return makeModule(alg, side, 1, actions);
}

Vec unitVector(std::size_t dim, std::size_t i) {
  Vec v(dim, 0);
  v[i] = 1;
  return v;
}

void BM_EvaluateDivisibility(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const ModulePtr m = power(regularModule(alg, Side::Right), 2);
  const PpFormula phi = parseFormula(alg, Side::Right, 2, "E y1 y2 . x1 + y1*t = 0 & x2 + y1 + y2*t = 0");
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(phi, m));
}
BENCHMARK(BM_EvaluateDivisibility)->DenseRange(2, 6, 2);

void BM_DualInvolution(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const PpFormula phi = parseFormula(alg, Side::Right, 2, "E y1 . x1 + y1*t = 0 & x2*t = 0");
  for (auto _ : state) benchmark::DoNotOptimize(dual(dual(phi)));
}
BENCHMARK(BM_DualInvolution)->DenseRange(2, 6, 2);

void BM_PpLattice(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const ModulePtr m = regularModule(alg, Side::Right);
  for (auto _ : state) benchmark::DoNotOptimize(ppLattice(m, 1));
}
BENCHMARK(BM_PpLattice)->DenseRange(2, 4);

void BM_HerzogVersusTensor(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const ModulePtr m = regularModule(alg, Side::Right);
  const ModulePtr l = regularModule(alg, Side::Left);
  const Tuple a{unitVector(m->dim(), 1)}, b{unitVector(l->dim(), m->dim() - 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(herzogZeroTest(m, a, l, b));
    benchmark::DoNotOptimize(tensorProduct(m, l).isZero(a, b));
  }
}
BENCHMARK(BM_HerzogVersusTensor)->DenseRange(2, 5);

void BM_Construction(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const ModulePtr rr = regularModule(alg, Side::Right);
  const DefinableContext ctx = makeContext(alg, Side::Right, {simple(alg, Side::Right)});
  Budget budget;
  budget.stages = 3;
  for (auto _ : state) benchmark::DoNotOptimize(runConstruction(rr, {unitVector(rr->dim(), 0)}, ctx, budget));
}
BENCHMARK(BM_Construction)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ScalarRing(benchmark::State& state) {
  const AlgebraPtr alg = truncated(static_cast<std::size_t>(state.range(0)));
  const DirectSum m = directSum({regularModule(alg, Side::Right), simple(alg, Side::Right)});
  for (auto _ : state) benchmark::DoNotOptimize(scalarRing(m.module));
}
BENCHMARK(BM_ScalarRing)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
