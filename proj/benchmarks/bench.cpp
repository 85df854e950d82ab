#include <benchmark/benchmark.h>

#include "dessins/canonical.hpp"
#include "dessins/dynamics.hpp"
#include "dessins/enumerate.hpp"
#include "dessins/perm_group.hpp"
#include "dessins/tree_dessin.hpp"

namespace {

using dessins::Color;
using dessins::NormalizedDessin;
using dessins::Perm;
using dessins::PermGroup;
using dessins::TreeDessin;
using dessins::VertexId;

NormalizedDessin star_f() {
  TreeDessin star(8, Perm::from_cycles(8, "(1 3 5 7)"),
                  Perm::from_cycles(8, "(1 2)(3 4)(5 6)(7 8)"));
  return NormalizedDessin(star, VertexId{Color::Black, 6}, VertexId{Color::Black, 2});
}

void BM_group_order_star(benchmark::State& state) {
  std::vector<Perm> gens{Perm::from_cycles(8, "(1 3 5 7)"),
                         Perm::from_cycles(8, "(1 2)(3 4)(5 6)(7 8)")};
  for (auto _ : state) {
    PermGroup g(8, gens);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_group_order_star);

void BM_iterate_recursion(benchmark::State& state) {
  NormalizedDessin f = star_f();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_recursion(f, n));
}
BENCHMARK(BM_iterate_recursion)->Arg(2)->Arg(3)->Arg(4);

void BM_iterate_substitution(benchmark::State& state) {
  NormalizedDessin f = star_f();
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate_substitution(f, n));
}
BENCHMARK(BM_iterate_substitution)->Arg(2)->Arg(3)->Arg(4);

void BM_canonical_key_second_iterate(benchmark::State& state) {
  NormalizedDessin second = iterate_recursion(star_f(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(second));
}
BENCHMARK(BM_canonical_key_second_iterate);

void BM_monodromy_order_second_iterate(benchmark::State& state) {
  TreeDessin second = iterate_recursion(star_f(), 2).dessin();
  for (auto _ : state) benchmark::DoNotOptimize(group_order(monodromy(second)));
}
BENCHMARK(BM_monodromy_order_second_iterate);

void BM_smooth_second_iterate(benchmark::State& state) {
  TreeDessin second = iterate_recursion(star_f(), 2).dessin();
  VertexId anchor = vertex_at(second, Color::Black, 1);
  for (auto _ : state) benchmark::DoNotOptimize(smooth(second, anchor));
}
BENCHMARK(BM_smooth_second_iterate);

void BM_enumerate_clean(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dessins::enumerate_clean(n));
}
BENCHMARK(BM_enumerate_clean)->Arg(6)->Arg(8);

void BM_enumerate_normalized_extra_clean(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dessins::enumerate_normalized(n, true));
}
BENCHMARK(BM_enumerate_normalized_extra_clean)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
