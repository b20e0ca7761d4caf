#include <benchmark/benchmark.h>

#include "charclass/chow.hpp"
#include "charclass/parser.hpp"

using namespace charclass;

namespace {

ContextPtr p2() { return make_context({"x0", "x1", "x2"}); }

const char* fixture(int idx) {
  switch (idx) {
    case 0: return "x0^2+x1^2+x2^2";
    case 1: return "x0^3+x1^3-x0*x1*x2";
    case 2: return "x1^2*x2-x0^3";
    default: return "x0^2*x1+x0*x1^2";
  }
}

void BM_groebner_jacobian(benchmark::State& state) {
  auto ctx = p2();
  Polynomial F = parse_polynomial(fixture(static_cast<int>(state.range(0))), ctx,
                                  Field::rationals());
  std::vector<Polynomial> jac;
  for (std::size_t i = 0; i < 3; ++i) jac.push_back(F.partial(i));
  for (auto _ : state) {
    Budget budget(Budget::kDefaultLimit);
    benchmark::DoNotOptimize(groebner_basis(jac, MonomialOrder::grevlex(), budget));
  }
}
BENCHMARK(BM_groebner_jacobian)->DenseRange(0, 3);

void BM_conormal(benchmark::State& state) {
  auto ctx = p2();
  HypersurfaceData h = make_hypersurface(
      parse_polynomial(fixture(static_cast<int>(state.range(0))), ctx, Field::rationals()));
  for (auto _ : state) benchmark::DoNotOptimize(conormal_ideal(h));
}
BENCHMARK(BM_conormal)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_multidegree(benchmark::State& state) {
  auto ctx = p2();
  HypersurfaceData h = make_hypersurface(
      parse_polynomial(fixture(static_cast<int>(state.range(0))), ctx, Field::rationals()));
  CycleData cc = charcycle_ideal(h);
  for (auto _ : state) benchmark::DoNotOptimize(multidegree(cc.ideal));
}
BENCHMARK(BM_multidegree)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_csm_pipeline(benchmark::State& state) {
  auto ctx = p2();
  HypersurfaceData h = make_hypersurface(
      parse_polynomial(fixture(static_cast<int>(state.range(0))), ctx, Field::rationals()));
  for (auto _ : state) benchmark::DoNotOptimize(csm_class(h));
}
BENCHMARK(BM_csm_pipeline)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_csm_prime_field(benchmark::State& state) {
  auto ctx = p2();
  HypersurfaceData h = make_hypersurface(parse_polynomial(
      fixture(static_cast<int>(state.range(0))), ctx, Field::prime(2147483647)));
  for (auto _ : state) benchmark::DoNotOptimize(csm_class(h));
}
BENCHMARK(BM_csm_prime_field)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
