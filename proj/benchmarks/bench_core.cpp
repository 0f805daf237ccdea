#include <benchmark/benchmark.h>

#include "affaut/degeneration.hpp"
#include "affaut/finite_action.hpp"
#include "affaut/identities.hpp"
#include "affaut/tame.hpp"

using namespace affaut;

namespace {

ParamRing qq() { return ring_over(FieldDesc::rationals()); }

static void BM_PolyMul(benchmark::State& state) {
  MultiPoly d = nagata_quadric(FieldDesc::rationals());
  MultiPoly p = d.pow(3);
  for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMul);

static void BM_NagataCompose(benchmark::State& state) {
  Endo n1 = nagata_map(Scalar::of_int(FieldDesc::rationals(), 1));
  Endo n2 = nagata_map(Scalar::of_int(FieldDesc::rationals(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(compose(n1, n2));
}
BENCHMARK(BM_NagataCompose);

static void BM_InverseOfPlaneWord(benchmark::State& state) {
  Endo e1 = parse_endo("(x1 + x2^3, x2) over QQ");
  Endo e2 = parse_endo("(x1, x2 + x1^2) over QQ");
  Endo f = compose(e1, e2);
  for (auto _ : state) benchmark::DoNotOptimize(formal_inverse(f));
}
BENCHMARK(BM_InverseOfPlaneWord);

static void BM_JvdkDecompose(benchmark::State& state) {
  Endo e1 = parse_endo("(x1 + 2*x2^3, x2) over QQ");
  Endo e2 = parse_endo("(x1, x2 - 3*x1^2) over QQ");
  Endo f = compose(e1, e2);
  for (auto _ : state) benchmark::DoNotOptimize(jvdk_decompose(f));
}
BENCHMARK(BM_JvdkDecompose);

static void BM_PermutationSign(benchmark::State& state) {
  FieldPtr f5 = FieldDesc::finite(5, 1);
  Endo e = parse_endo("(x1 + x2^2, x2 + x3^3, x3) over GF(5)");
  for (auto _ : state) benchmark::DoNotOptimize(permutation_of(e));
}
BENCHMARK(BM_PermutationSign);

static void BM_CommutatorPipeline(benchmark::State& state) {
  Endo f = parse_endo("(x1 + x2^2, x2) over QQ");
  std::vector<Scalar> samples{Scalar::of_int(FieldDesc::rationals(), 1)};
  for (auto _ : state) benchmark::DoNotOptimize(commutator_pipeline(f, samples));
}
BENCHMARK(BM_CommutatorPipeline);

}  // namespace

BENCHMARK_MAIN();
