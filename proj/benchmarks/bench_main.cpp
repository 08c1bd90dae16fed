#include <benchmark/benchmark.h>

#include "soergel/bsmod.hpp"
#include "soergel/exprgraph.hpp"
#include "soergel/hecke.hpp"
#include "soergel/poly.hpp"
#include "soergel/thick.hpp"

using namespace soergel;

namespace {

MultiPoly sample_poly(int n, int d) {
  MultiPoly p;
  std::vector<int> vars;
  for (int k = 1; k <= n; ++k) vars.push_back(k);
  int c = 1;
  for (MonoKey m : monomials_of_degree(vars, d)) p += MultiPoly::monomial(m, c++);
  return p;
}

void BM_demazure_word(benchmark::State& st) {
  int d = static_cast<int>(st.range(0));
  MultiPoly p = sample_poly(4, d);
  Word w = longest_word({1, 2, 3});
  for (auto _ : st) benchmark::DoNotOptimize(demazure_word(w, p));
}
BENCHMARK(BM_demazure_word)->Arg(6)->Arg(8)->Arg(10);

void BM_hecke_longest(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  IndexSet J;
  for (int k = 1; k <= n; ++k) J.push_back(k);
  for (auto _ : st) benchmark::DoNotOptimize(b_word(longest_word(J), n));
}
BENCHMARK(BM_hecke_longest)->DenseRange(2, 4);

void BM_hom_rank_bs(benchmark::State& st) {
  Word x{1, 2, 1, 3, 2}, y{2, 3, 1, 2, 1};
  for (auto _ : st) benchmark::DoNotOptimize(hom_rank_bs(x, y));
}
BENCHMARK(BM_hom_rank_bs);

void BM_expanded_graph(benchmark::State& st) {
  int n = static_cast<int>(st.range(0));
  IndexSet J;
  for (int k = 1; k <= n; ++k) J.push_back(k);
  for (auto _ : st) {
    auto g = build_expanded(longest(J, n).w);
    benchmark::DoNotOptimize(conflate(g));
  }
}
BENCHMARK(BM_expanded_graph)->DenseRange(2, 4);

void BM_compose_sixvalent(benchmark::State& st) {
  BSMorphism f = gen_sixvalent(1, 2), g = gen_sixvalent(2, 1);
  for (auto _ : st) benchmark::DoNotOptimize(compose_v(g, f));
}
BENCHMARK(BM_compose_sixvalent);

void BM_z_morphism(benchmark::State& st) {
  IndexSet J = st.range(0) == 2 ? IndexSet{1, 2} : IndexSet{1, 2, 3};
  for (auto _ : st) benchmark::DoNotOptimize(z_morphism(J));
}
BENCHMARK(BM_z_morphism)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_hom_dim(benchmark::State& st) {
  Word x{1, 2, 1}, y{2, 1, 2};
  int m = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hom_dim_at_degree(x, y, m, 3));
}
BENCHMARK(BM_hom_dim)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
