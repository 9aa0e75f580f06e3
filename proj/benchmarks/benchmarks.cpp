#include <benchmark/benchmark.h>

#include "gtt/roots.hpp"
#include "gtt/simplicial.hpp"
#include "gtt/tch.hpp"
#include "gtt/templates.hpp"
#include "gtt/triangulate.hpp"

namespace {

using namespace gtt;

void BM_UniPolyMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Rat> a, b;
  for (int i = 0; i <= n; ++i) {
    a.emplace_back(i + 1);
    b.emplace_back(n - i + 1, i + 2);
  }
  const UniPoly p(a), q(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}
BENCHMARK(BM_UniPolyMul)->Arg(32)->Arg(128);

void BM_TRecurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Template L = build_star_template(2);
  for (auto _ : state) {
    TchFamily family(L);  // fresh instance: measure the uncached recurrence
    benchmark::DoNotOptimize(family.t_recurrence(n));
  }
}
BENCHMARK(BM_TRecurrence)->Arg(8)->Arg(16);

void BM_TDirect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Template L = build_star_template(2);
  for (auto _ : state) {
    TchFamily family(L);
    benchmark::DoNotOptimize(family.t_direct(n));
  }
}
BENCHMARK(BM_TDirect)->Arg(8)->Arg(12);

void BM_Triangulate(benchmark::State& state) {
  const auto K = cross_polytope_boundary(static_cast<int>(state.range(0)));
  const Template L = build_path_template(1);
  const auto plan = default_plan(K, L);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tchebyshev_triangulation(K, L, plan));
  }
}
BENCHMARK(BM_Triangulate)->Arg(3)->Arg(4);

void BM_SturmCount(benchmark::State& state) {
  const Template L = build_path_template(3);
  TchFamily family(L);
  const UniPoly t = family.t_recurrence(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_distinct_real_roots(t, Rat(-1), Rat(1)));
  }
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(12);

void BM_Betti(benchmark::State& state) {
  const auto K = cross_polytope_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_betti(K));
  }
}
BENCHMARK(BM_Betti)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
