#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "oracle.hpp"
#include "twistspin/alexander.hpp"
#include "twistspin/btspin.hpp"
#include "twistspin/knot_codec.hpp"

using namespace twistspin;

namespace {

const char* kFiveTwo = "PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]";

void BM_MinorDet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  const PolyMatrix a = oracle::random_matrix(rng, n, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(minor_det(a, idx, idx));
}
BENCHMARK(BM_MinorDet)->DenseRange(2, 8, 2);

void BM_AlexanderPolynomial(benchmark::State& state) {
  const Presentation p = wirtinger(parse_knot(kFiveTwo));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(p));
}
BENCHMARK(BM_AlexanderPolynomial);

void BM_E1BruteForce(benchmark::State& state) {
  const Presentation p = wirtinger(parse_knot(kFiveTwo));
  const BtSpinParams params = solve_beta_alpha(5, 2);
  const MinorOptions options{2'000'000, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(e1_brute_force(p, params, options));
}
BENCHMARK(BM_E1BruteForce)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_E0Check(benchmark::State& state) {
  const Presentation p = wirtinger(parse_knot(kFiveTwo));
  const BtSpinParams params = solve_beta_alpha(-3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(e0_check(p, params, {2'000'000, 1}));
}
BENCHMARK(BM_E0Check)->Unit(benchmark::kMillisecond);

void BM_Gcd(benchmark::State& state) {
  const auto degree = static_cast<unsigned>(state.range(0));
  const LaurentPoly common = pow(LaurentPoly::parse("1 - 3t + t^2"), degree / 2);
  const LaurentPoly a = common * pow(LaurentPoly::parse("2 + t"), degree);
  const LaurentPoly b = common * pow(LaurentPoly::parse("1 - t + 5t^3"), degree / 3 + 1);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_up_to_unit(a, b));
}
BENCHMARK(BM_Gcd)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
BENCHMARK_MAIN();
