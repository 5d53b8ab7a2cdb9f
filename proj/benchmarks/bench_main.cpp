#include <benchmark/benchmark.h>

#include "pgeom/embed.hpp"
#include "pgeom/extremal.hpp"
#include "pgeom/geometry.hpp"

using namespace pgeom;

static void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::make(static_cast<int>(state.range(0)));
  const int q = f.q();
  for (auto _ : state) {
    unsigned acc = 0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) acc += f.mul(a, b);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * q * q);
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(9)->Arg(16);

static void BM_EnumerateFlats(benchmark::State& state) {
  const Field f = Field::make(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_flats(n, f, n / 2));
}
BENCHMARK(BM_EnumerateFlats)->Args({2, 5})->Args({3, 4})->Args({4, 4});

static void BM_FlatIntersect(benchmark::State& state) {
  const Field f = Field::make(3);
  const auto planes = enumerate_flats(5, f, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flat_intersect(f, planes[i % planes.size()], planes[(i * 7 + 3) % planes.size()]));
    ++i;
  }
}
BENCHMARK(BM_FlatIntersect);

static void BM_ContainsPositive(benchmark::State& state) {
  const Field f = Field::make(3);
  const Geometry host = make_g(4, f, 2);
  const Geometry guest = make_ag(3, f);
  for (auto _ : state) benchmark::DoNotOptimize(contains(host, guest));
}
BENCHMARK(BM_ContainsPositive);

static void BM_ContainsNegative(benchmark::State& state) {
  const Field f = Field::make(static_cast<int>(state.range(0)));
  const Geometry host = make_ag(4, f);
  const Geometry guest = make_g(3, f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(contains(host, guest));
}
BENCHMARK(BM_ContainsNegative)->Arg(2)->Arg(3);

static void BM_ExExact(benchmark::State& state) {
  const Field f = Field::make(static_cast<int>(state.range(0)));
  const Geometry h = state.range(0) == 2 ? make_pg(2, f) : make_ag(2, f);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ex_exact(h, n).value);
}
BENCHMARK(BM_ExExact)->Args({2, 4})->Args({2, 5})->Args({3, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

static void BM_CriticalExponent(benchmark::State& state) {
  const Geometry g = make_g(4, Field::make(3), 3);
  for (auto _ : state) benchmark::DoNotOptimize(critical_exponent(g));
}
BENCHMARK(BM_CriticalExponent);

BENCHMARK_MAIN();
