#include <benchmark/benchmark.h>

#include "rotno/examples.hpp"
#include "rotno/family.hpp"
#include "rotno/farey.hpp"
#include "rotno/rotation.hpp"

namespace {

using namespace rotno;

void BM_rotation_step_map(benchmark::State& state) {
  const Lift f = example_lift("ex5_f").right_map();
  for (auto _ : state) {
    auto r = rotation_number(f);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_rotation_step_map);

void BM_compare_rotation_homeomorphism(benchmark::State& state) {
  const auto [h_minus, h_plus] = Lift::sandwich_homeos(example_lift("ex1_f"), Rational(1, 10));
  const Lift g = Lift::affine_combination(Rational(1, 3), h_minus, Rational(2, 3), h_plus);
  for (auto _ : state) {
    int cmp = compare_rotation(g, Rational(1, 3));
    benchmark::DoNotOptimize(cmp);
  }
}
BENCHMARK(BM_compare_rotation_homeomorphism);

void BM_sset(benchmark::State& state) {
  const Rational lo(355, 1130 + 1), hi(355, 1130);
  for (auto _ : state) {
    auto s = sset(lo, hi);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_sset);

void BM_vset_two_gap_family(benchmark::State& state) {
  const Lift f = example_ex4(Rational(0), Rational(0));
  VsetOptions opt;
  opt.depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = vset(f, opt);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_vset_two_gap_family)->Arg(2)->Arg(6)->Arg(10);

void BM_tune_lambda(benchmark::State& state) {
  const Lift f = example_lift("ex1_f");
  for (auto _ : state) {
    auto t = tune_lambda(f, Rational(1, 3), Rational(1, 10));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_tune_lambda);

}  // namespace

BENCHMARK_MAIN();
