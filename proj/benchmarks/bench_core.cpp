#include <benchmark/benchmark.h>

#include "redmat/mat.hpp"
#include "redmat/poly.hpp"
#include "redmat/rng.hpp"

using namespace redmat;

static void BM_RrefGf(benchmark::State& state) {
  Rng rng(1);
  Field f = default_field();
  Mat m = rng.mat(f, state.range(0), state.range(0));
  for (auto _ : state) {
    auto rr = m.rref();
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RrefGf)->Arg(16)->Arg(64)->Arg(128);

static void BM_RrefRational(benchmark::State& state) {
  Rng rng(1);
  Field f = Field::rationals();
  Mat m = rng.mat(f, state.range(0), state.range(0));
  for (auto _ : state) {
    auto rr = m.rref();
    benchmark::DoNotOptimize(rr.rank);
  }
}
BENCHMARK(BM_RrefRational)->Arg(8)->Arg(16);

static void BM_MinPoly(benchmark::State& state) {
  Rng rng(3);
  Field f = default_field();
  Mat m = rng.mat(f, state.range(0), state.range(0));
  for (auto _ : state) {
    Poly p = min_poly(m);
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_MinPoly)->Arg(8)->Arg(24);

BENCHMARK_MAIN();
