#include <benchmark/benchmark.h>

#include "cmsym/classify.hpp"
#include "cmsym/feasibility.hpp"
#include "cmsym/homology.hpp"
#include "corpus.hpp"

using namespace cmsym;

static void BM_ReducedHomology(benchmark::State& state) {
  const auto c = skeleton(SimplicialComplex::simplex(static_cast<int>(state.range(0))), 2);
  const auto field = state.range(1) == 0 ? FieldSpec::rationals() : FieldSpec::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(c, field));
}
BENCHMARK(BM_ReducedHomology)->ArgsProduct({{5, 6, 7}, {0, 1}});

static void BM_CmComplex(benchmark::State& state) {
  const auto rp2 = cli::projective_plane();
  for (auto _ : state) benchmark::DoNotOptimize(is_cm_complex(rp2, FieldSpec::rationals()));
}
BENCHMARK(BM_CmComplex);

// Fresh classifier per iteration so the CM cache starts cold.
static void BM_BoxRoute(benchmark::State& state) {
  const auto c5 = cli::five_cycle();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Classifier(FieldSpec::rationals()).box(c5, m));
}
BENCHMARK(BM_BoxRoute)->DenseRange(2, 4);

static void BM_SubcomplexRoute(benchmark::State& state) {
  const auto flap = cli::tetra_flap();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Classifier(FieldSpec::rationals()).subcomplex(flap, m));
}
BENCHMARK(BM_SubcomplexRoute)->DenseRange(2, 4);

static void BM_StructuralRoute(benchmark::State& state) {
  const auto rp2 = cli::projective_plane();
  for (auto _ : state) benchmark::DoNotOptimize(Classifier(FieldSpec::prime(2)).structural(rp2));
}
BENCHMARK(BM_StructuralRoute);

static void BM_StrictLp(benchmark::State& state) {
  const auto k4 = cli::complete_graph_k4();
  const FacetSubset gamma = generated_subcomplex(k4, {1, 4});
  for (auto _ : state) benchmark::DoNotOptimize(strict_homogeneous_feasible(k4, gamma));
}
BENCHMARK(BM_StrictLp);

static void BM_IntegerFeasible(benchmark::State& state) {
  const auto flap = cli::tetra_flap();
  const FacetSubset gamma = generated_subcomplex(flap, {0, 4});
  const std::vector<std::int64_t> m(5, state.range(0));
  const LinearSystem sys = build_L_system(flap, gamma, m);
  for (auto _ : state) benchmark::DoNotOptimize(integer_feasible(sys));
}
BENCHMARK(BM_IntegerFeasible)->DenseRange(3, 9, 3);

static void BM_AllSymbolic(benchmark::State& state) {
  const auto k4 = cli::complete_graph_k4();
  for (auto _ : state) benchmark::DoNotOptimize(all_symbolic_cm(k4, FieldSpec::rationals()));
}
BENCHMARK(BM_AllSymbolic);

BENCHMARK_MAIN();
