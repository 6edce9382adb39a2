#include <benchmark/benchmark.h>

#include "diagzeta/diagzeta.hpp"

namespace {

using namespace diagzeta;

void BM_PrimeFieldMul(benchmark::State& state) {
  auto f = ff::build_prime_field(1000003);
  std::uint64_t x = 123456, y = 654321;
  for (auto _ : state) {
    x = f->mul_enc(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_PrimeFieldMul);

void BM_TowerFieldMul(benchmark::State& state) {
  auto f625 = ff::build_extension(ff::build_extension(ff::build_prime_field(5), 2), 2);
  std::uint64_t x = 321, y = 123;
  for (auto _ : state) {
    x = f625->mul_enc(x, y);
    if (x == 0) x = 321;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_TowerFieldMul);

void BM_PowerTableF625(benchmark::State& state) {
  auto f25 = ff::build_extension(ff::build_prime_field(5), 2);
  auto f625 = ff::build_extension(f25, 2);
  for (auto _ : state) {
    std::uint64_t acc = 0;
    for (std::uint64_t enc = 0; enc < f625->order(); ++enc) {
      acc ^= f625->pow_enc(enc, BigInt(6));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PowerTableF625);

void BM_BruteForceSexticN2(benchmark::State& state) {
  const curve::Curve sextic = curve::make_curve(5, 3, 6, 1, "1", "1", "1");
  for (auto _ : state) {
    auto count = count::count_bruteforce(sextic, 2);
    benchmark::DoNotOptimize(count.value);
  }
}
BENCHMARK(BM_BruteForceSexticN2);

void BM_DiscreteLogF15625(benchmark::State& state) {
  auto f25 = ff::build_extension(ff::build_prime_field(5), 2);
  auto big = ff::build_extension(f25, 3);
  const ff::FieldElement gamma = ff::find_generator(big);
  const ff::FieldElement target = gamma.pow(BigInt(12345));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ff::discrete_log(gamma, target));
  }
}
BENCHMARK(BM_DiscreteLogF15625);

void BM_ExpandCase7L7(benchmark::State& state) {
  const curve::CurveParams params = curve::validate_params(13, 7, 14, 1);
  const curve::CaseLabel label = curve::classify(params, 1, 8);
  for (auto _ : state) {
    auto p = zeta::expand(zeta::build_factored_p(params, label));
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_ExpandCase7L7);

void BM_SeriesConsistencySextic(benchmark::State& state) {
  const curve::CurveParams params = curve::validate_params(5, 3, 6, 1);
  const zeta::ZetaFunction z = zeta::zeta_for_case(params, curve::classify(params, 0, 0));
  for (auto _ : state) {
    const bool ok = zeta::series_consistency(
        z, [&](std::uint32_t n) { return count::count_formula(params, 0, 0, n).value; },
        22);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_SeriesConsistencySextic);

void BM_ClassNumberL7(benchmark::State& state) {
  const curve::CurveParams params = curve::validate_params(13, 7, 14, 3);
  const curve::CaseLabel label = curve::classify(params, 1, 8);
  for (auto _ : state) {
    auto h = classnum::closed_form(label, params.u, params.s, params.l);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ClassNumberL7);

}  // namespace

BENCHMARK_MAIN();
