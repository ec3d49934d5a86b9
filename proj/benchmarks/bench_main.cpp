#include <benchmark/benchmark.h>

#include "h10m/curve/checks.hpp"
#include "h10m/curve/endo.hpp"
#include "h10m/encoder/encoder.hpp"
#include "h10m/places/orders.hpp"
#include "h10m/series/solvers.hpp"

using namespace h10m;
using algebra::MPoly;
using algebra::RatFunc;

namespace {

void BM_MultiplyPointDivisionPolys(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    curve::EndoTable t(curve::MultiplyRoute::DivisionPolynomials);
    benchmark::DoNotOptimize(t.get(n));
  }
}
BENCHMARK(BM_MultiplyPointDivisionPolys)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MultiplyPointRepeatedAddition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    curve::EndoTable t(curve::MultiplyRoute::RepeatedAddition);
    benchmark::DoNotOptimize(t.get(n));
  }
}
BENCHMARK(BM_MultiplyPointRepeatedAddition)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_PolyGcd(benchmark::State& state) {
  const MPoly z(algebra::vars::z()), d(algebra::vars::delta());
  const MPoly common = (z.pow(3) + d * z.pow(2) + z - 1).pow(static_cast<unsigned>(state.range(0)));
  const MPoly a = common * (z + d + 3).pow(2), b = common * (z * d - 5);
  for (auto _ : state) benchmark::DoNotOptimize(algebra::poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_Liz(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto p = curve::shared_endo_table().get(n);
  for (auto _ : state) benchmark::DoNotOptimize(places::compute_A(p.x, p.y));
}
BENCHMARK(BM_Liz)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Mariac(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  curve::shared_endo_table().get(n);
  for (auto _ : state) benchmark::DoNotOptimize(curve::check_mariac(n));
}
BENCHMARK(BM_Mariac)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_OrderAtZMinusOne(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RatFunc g = curve::shared_endo_table().get(n).x - RatFunc(1);
  for (auto _ : state) benchmark::DoNotOptimize(places::ord_at(g, places::Place::z_minus_1()));
}
BENCHMARK(BM_OrderAtZMinusOne)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Represent(benchmark::State& state) {
  const int trunc = static_cast<int>(state.range(0));
  const algebra::Var z = algebra::vars::z();
  MPoly h;
  for (int k = 0; k <= 8; ++k) h += MPoly(algebra::Rational(k + 1, 3)) * MPoly(z).pow(k);
  auto H = series::rebuild(2, -1, series::series_from_poly(h, z, trunc));
  for (auto _ : state) benchmark::DoNotOptimize(series::represent(H));
}
BENCHMARK(BM_Represent)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_EncodeSystem(benchmark::State& state) {
  const auto d = static_cast<encoder::Dialect>(state.range(0));
  const auto sys = encoder::parse_diophantine("a^2 + b^2 = c^2");
  for (auto _ : state) benchmark::DoNotOptimize(encoder::encode_system(sys, d));
}
BENCHMARK(BM_EncodeSystem)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
