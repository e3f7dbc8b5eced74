#include <benchmark/benchmark.h>

#include "stdist/coxeter.hpp"
#include "stdist/period.hpp"
#include "stdist/residue.hpp"
#include "stdist/tree.hpp"

using namespace stdist;

static void BM_GrowthA3(benchmark::State& state) {
  const auto system = coxeter::build_affine_system(coxeter::Family::A, 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(coxeter::growth_coefficients(system, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GrowthA3)->Arg(8)->Arg(12)->Arg(16);

static void BM_GrowthE8(benchmark::State& state) {
  const auto system = coxeter::build_affine_system(coxeter::Family::E, 8);
  for (auto _ : state) benchmark::DoNotOptimize(coxeter::growth_coefficients(system, 6));
}
BENCHMARK(BM_GrowthE8);

static void BM_PoincareE8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coxeter::poincare_finite(coxeter::Family::E, 8));
}
BENCHMARK(BM_PoincareE8);

static void BM_PeriodClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(period::period_closed_form(coxeter::Family::G, 2, 5));
}
BENCHMARK(BM_PeriodClosedForm);

static void BM_BuildTree(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tree::build_tree_pair(state.range(0), 5));
}
BENCHMARK(BM_BuildTree)->Arg(2)->Arg(3);

static void BM_InvariantSolver(benchmark::State& state) {
  const auto t = tree::build_tree_pair(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(tree::invariant_solver(t));
}
BENCHMARK(BM_InvariantSolver)->Arg(2)->Arg(3);

static void BM_InversionClosure(benchmark::State& state) {
  const auto fields = residue::build_fields(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(residue::inversion_closure_orbits(fields));
}
BENCHMARK(BM_InversionClosure);
BENCHMARK_MAIN();
