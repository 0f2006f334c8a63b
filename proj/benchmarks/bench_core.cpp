#include "qshuffle/checks.hpp"
#include "qshuffle/shuffle.hpp"

#include <benchmark/benchmark.h>

using namespace qshuffle;

namespace {

void BM_ShuffleAlternating(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ExactField f;  // fresh memo table each round
    const auto a = WordPoly<Scalar>::monomial(alternating_word(AltKind::Wminus, n), Scalar(1));
    const auto b = WordPoly<Scalar>::monomial(alternating_word(AltKind::Wplus, n), Scalar(1));
    benchmark::DoNotOptimize(shuffle(a, b, f));
  }
}
BENCHMARK(BM_ShuffleAlternating)->DenseRange(1, 4);

void BM_BuildK(benchmark::State& state) {
  const Spin j = Spin::from_twice(static_cast<int>(state.range(0)));
  const int D = static_cast<int>(state.range(1));
  const auto how = static_cast<KConstruction>(state.range(2));
  for (auto _ : state) {
    ExactField f;
    Builder<ExactField> b(f);
    benchmark::DoNotOptimize(b.K(j, D, Var::t, how));
  }
}
BENCHMARK(BM_BuildK)->ArgsProduct({{1, 2, 3}, {4, 8}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

void BM_FreidelMaillet(benchmark::State& state) {
  CheckSpec s;
  s.check = "fm";
  s.spins = {Spin::from_twice(static_cast<int>(state.range(0))), Spin::from_twice(static_cast<int>(state.range(1)))};
  s.degree = static_cast<int>(state.range(2));
  s.backend = state.range(3) ? Backend::numeric : Backend::exact;
  s.q_samples = {1.3};
  for (auto _ : state) {
    const auto r = run_check(s, false);
    if (!r.pass) state.SkipWithError("check failed");
  }
}
BENCHMARK(BM_FreidelMaillet)
    ->ArgsProduct({{1}, {1}, {2, 4, 6}, {0, 1}})
    ->ArgsProduct({{2}, {2}, {2, 4, 6}, {0, 1}})
    ->Args({1, 3, 6, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
